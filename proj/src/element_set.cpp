#include "qlogic/element_set.hpp"

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

void check_index(Element e) {
  if (e >= ElementSet::kMaxElements) {
    throw ResourceError("element index " + std::to_string(e) + " exceeds the 64-element carrier limit");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<Element> members) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t size) {
  if (size > kMaxElements) {
    throw ResourceError("carrier of " + std::to_string(size) + " elements exceeds the 64-element limit");
  }
  return from_bits(size == kMaxElements ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
}

ElementSet ElementSet::from_members(const std::vector<Element>& members) {
  ElementSet s;
  for (Element e : members) s.insert(e);
  return s;
}

void ElementSet::insert(Element e) {
  check_index(e);
  bits_ |= std::uint64_t{1} << e;
}

void ElementSet::erase(Element e) {
  if (e < kMaxElements) bits_ &= ~(std::uint64_t{1} << e);
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace qlogic
