#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlogic/proof.hpp"

namespace qlogic {

enum class ModelClass {
  /// Projective models when the mode is projective or the rule is WR.
  Auto,
  Unconstrained,
  Projective,
};

std::string_view model_class_name(ModelClass m);
std::optional<ModelClass> parse_model_class(std::string_view name);

struct HarnessOptions {
  RuleTag rule = RuleTag::AxId;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  CalculusMode mode = CalculusMode::Plain;
  ModelClass models = ModelClass::Auto;
};

/// A rule instance whose premises all hold in a model where the conclusion fails.
struct HarnessViolation {
  std::size_t trial = 0;
  QStructure structure;
  Assignment assignment;
  std::vector<Sequent> premises;
  Sequent conclusion;

  std::string describe() const;
};

struct HarnessReport {
  RuleTag rule = RuleTag::AxId;
  CalculusMode mode = CalculusMode::Plain;
  bool projective_models = false;
  std::size_t trials = 0;
  /// Trials whose premises were not all valid (nothing to check).
  std::size_t vacuous = 0;
  std::vector<HarnessViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Model pool: every enumerated structure of size <= 3 plus seeded random
/// structures of sizes 4 and 5 (filtered to projective ones when required).
/// Each trial draws a model, an assignment of random facts to a, b, c and a
/// random instance of the rule's schema (checked against check_step), and
/// records a violation whenever all premises are valid but the conclusion
/// is not. Trial t is a function of (seed, t) only.
HarnessReport soundness_harness(const HarnessOptions& options);

/// Re-evaluates a recorded violation: true iff the premises still hold and
/// the conclusion still fails.
bool replay_violation(const HarnessViolation& v);

}  // namespace qlogic
