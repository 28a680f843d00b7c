#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qlogic {

using Element = std::uint32_t;

/// A subset of a finite carrier {0, ..., n-1}, n <= 64, stored as a bit mask.
/// The mask is canonical, so equality and ordering are structural; ordering by
/// bit pattern puts every subset before its strict supersets.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> members);

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static ElementSet full(std::size_t size);
  static ElementSet from_members(const std::vector<Element>& members);

  bool contains(Element e) const { return e < kMaxElements && ((bits_ >> e) & 1U) != 0; }
  void insert(Element e);
  void erase(Element e);

  bool empty() const { return bits_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }

  bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Element> members() const;

  /// Calls fn(e) for each member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    std::uint64_t rest = bits_;
    while (rest != 0) {
      fn(static_cast<Element>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
  }

  friend ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }

  friend bool operator==(ElementSet, ElementSet) = default;
  friend std::strong_ordering operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0, 2, 3}" using raw indices.
std::string to_string(ElementSet s);

}  // namespace qlogic
