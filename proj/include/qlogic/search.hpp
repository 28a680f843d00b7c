#pragma once

#include <optional>

#include "qlogic/proof.hpp"

namespace qlogic {

struct SearchOptions {
  std::size_t max_depth = 8;
  CalculusMode mode = CalculusMode::Plain;
  /// Cut formulas are restricted to subformulas of the goal and their negations.
  bool allow_cut = false;
};

/// Iterative-deepening backward search over the rule schemas. Depth is tree
/// height (an axiom leaf has depth 1). The result is a proof of least height,
/// leftmost in the fixed rule order. std::nullopt means "not found within
/// max_depth", never "unprovable".
///
/// The goal must be right-sided (see right_normalize); its formulas are
/// searched as given, so callers wanting connective rules to fire on negated
/// compound formulas should pass them through nnf first.
std::optional<ProofTree> search(const Sequent& goal, const SearchOptions& options = {});

/// right_normalize, then nnf on every formula: the form the search works on.
Sequent proof_goal(const Sequent& s);

}  // namespace qlogic
