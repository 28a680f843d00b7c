#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/formula.hpp"
#include "qlogic/phase.hpp"

namespace qlogic {

/// Atom name -> fact of one fixed Q-structure.
using Assignment = std::map<std::string, Fact>;

/// Structural recursion: atoms from asg, 1 -> one_fact, T -> top_fact, and
/// each connective to its fact operation. Throws EvaluationError for an
/// unbound atom and UsageError for a fact of another structure.
Fact eval(const QStructure& q, const Assignment& asg, const Formula& f);

/// A1, ..., An |- B1, ..., Bm with both sides ordered sequences.
struct Sequent {
  std::vector<Formula> antecedents;
  std::vector<Formula> succedents;

  bool right_sided() const { return antecedents.empty(); }

  static Sequent right(std::vector<Formula> succedents) { return Sequent{{}, std::move(succedents)}; }

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Parses "F1, F2 |- G1, G2"; either side may be empty, not both.
Sequent parse_sequent(std::string_view text);
std::string to_string(const Sequent& s);

/// The sequent is valid iff (A1 * ... * An) -o (B1 | ... | Bm), folded to the
/// left, contains the unit. Empty antecedents stand for 1 and empty
/// succedents for ~1 (the fact Z). Throws UsageError when both sides are empty.
bool sequent_valid(const QStructure& q, const Assignment& asg, const Sequent& s);

/// A1..An |- B1..Bm  becomes  |- B1..Bm, ~An, ..., ~A1, moving the rightmost
/// antecedent to the rightmost succedent each step. Negations are put in
/// negation normal form. An empty succedent list starts as [~1].
Sequent right_normalize(const Sequent& s);

std::set<std::string> atoms_of(const Sequent& s);

}  // namespace qlogic
