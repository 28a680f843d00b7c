#pragma once

// Finite Q-structures and their phase semantics: orthogonality, facts,
// the multiplicative and additive connectives, validity and projectivity.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/element_set.hpp"

namespace qlogic {

/// A finite Q-structure <P, Z, ., 1> with P = {0, ..., size-1}.
///
/// Construction checks only the shape of the data (table dimensions, index
/// ranges, label uniqueness) and throws StructuralError on malformed input.
/// The Q-structure axioms are checked separately by validate(), so that
/// defective tables can still be inspected and reported on.
///
/// Copies share the immutable underlying data.
class QStructure {
 public:
  QStructure(std::size_t size, Element unit, std::vector<Element> dot_row_major, ElementSet garbage,
             std::vector<std::string> labels = {});

  static QStructure from_table(Element unit, const std::vector<std::vector<Element>>& dot, ElementSet garbage,
                               std::vector<std::string> labels = {});

  std::size_t size() const { return impl_->size; }
  Element unit() const { return impl_->unit; }
  Element dot(Element x, Element y) const { return impl_->dot[x * impl_->size + y]; }
  ElementSet garbage() const { return impl_->garbage; }
  bool in_garbage(Element e) const { return impl_->garbage.contains(e); }
  ElementSet carrier() const { return ElementSet::full(impl_->size); }

  /// {b : b . a in Z}, i.e. orth({a}).
  ElementSet orthogonal_to(Element a) const { return impl_->orth_columns[a]; }

  const std::vector<Element>& table() const { return impl_->dot; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  /// Display label; falls back to the index when no labels were given.
  std::string label(Element e) const;
  std::optional<Element> find_label(std::string_view label) const;
  std::string format(ElementSet s) const;

  /// Same carrier, unit, table and garbage (labels are ignored).
  friend bool operator==(const QStructure& a, const QStructure& b);

 private:
  struct Impl {
    std::size_t size = 0;
    Element unit = 0;
    std::vector<Element> dot;
    ElementSet garbage;
    std::vector<std::string> labels;
    std::vector<ElementSet> orth_columns;
  };
  std::shared_ptr<const Impl> impl_;
};

enum class Condition { UnitNeutrality, Symmetry, Reversal };

std::string_view condition_name(Condition c);

struct Violation {
  Condition condition;
  /// (x) for unit neutrality, (x, y) for symmetry, (x, y, z) for reversal.
  std::vector<Element> witness;

  std::string describe(const QStructure& q) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Informational only: whether Z = { x . y | x orthogonal to y }.
  bool garbage_is_orthogonal_products = false;

  bool ok() const { return violations.empty(); }
};

/// Lists every violation of unit neutrality, the symmetry condition and the
/// reversal condition.
ValidationReport validate(const QStructure& q);

/// Early-exit form of validate(q).ok().
bool satisfies_axioms(const QStructure& q);

ElementSet orth(const QStructure& q, ElementSet a);
ElementSet biorth(const QStructure& q, ElementSet a);
bool is_fact(const QStructure& q, ElementSet a);
/// Pointwise image { x . y : x in a, y in b }.
ElementSet dot_set(const QStructure& q, ElementSet a, ElementSet b);

/// A biorthogonally closed subset of a Q-structure's carrier.
class Fact {
 public:
  /// Throws UsageError unless members is a fact of q.
  static Fact from_set(const QStructure& q, ElementSet members);
  /// orth(a), which is always a fact.
  static Fact orthogonal_of(const QStructure& q, ElementSet a);
  /// biorth(a), the least fact containing a.
  static Fact closure_of(const QStructure& q, ElementSet a);

  const QStructure& structure() const { return structure_; }
  ElementSet members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_subset_of(const Fact& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Fact& a, const Fact& b) {
    return a.members_ == b.members_ && a.structure_ == b.structure_;
  }
  friend bool operator<(const Fact& a, const Fact& b) { return a.members_ < b.members_; }

 private:
  Fact(QStructure q, ElementSet members) : structure_(std::move(q)), members_(members) {}

  friend std::vector<Fact> all_facts(const QStructure& q);
  friend Fact with_(const Fact& f, const Fact& g);

  QStructure structure_;
  ElementSet members_;
};

/// Every fact of q in increasing bit-pattern order; the first is zero_fact(q).
/// Computed as the intersection closure of the principal orthogonals {x}^⊥
/// together with the full carrier.
std::vector<Fact> all_facts(const QStructure& q);

Fact neg(const Fact& f);
Fact tensor(const Fact& f, const Fact& g);
Fact par(const Fact& f, const Fact& g);
Fact limp(const Fact& f, const Fact& g);
Fact with_(const Fact& f, const Fact& g);
Fact plus(const Fact& f, const Fact& g);

/// 1 = Z^⊥
Fact one_fact(const QStructure& q);
/// 0 = P^⊥
Fact zero_fact(const QStructure& q);
/// T = P
Fact top_fact(const QStructure& q);
/// {1}^⊥, which always equals Z.
Fact z_fact(const QStructure& q);

/// 1 ∈ F; also cross-checks 1 ⊆ F and F^⊥ ⊆ Z.
bool is_valid_fact(const Fact& f);

/// Z absorbs on the left: z . y ∈ Z for z ∈ Z and every y.
bool is_projective(const QStructure& q);

}  // namespace qlogic
