#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/phase.hpp"
#include "qlogic/random.hpp"
#include "qlogic/rational_linalg.hpp"

namespace qlogic {

/// Classical propositional logic as a Q-structure: the 2^|V| truth
/// assignments plus a unit 1 (index 0) and an absorbing 0 (last index), with
/// m . m = m, m . m' = 0 for m != m', and Z = {0}.
/// Assignment k (index k + 1) makes variable i true iff bit i of k is set.
/// Throws ResourceError for more than 4 variables.
QStructure classical_model(const std::vector<std::string>& variables);

/// The ray model: given rays (index 1..k), a unit H (index 0) and a zero
/// element (last index). x . y = y unless x and y are orthogonal, in which
/// case it is 0; Z = {0}. Throws UsageError for zero or collinear rays.
QStructure ray_model(const std::vector<RationalVector>& rays, std::size_t ambient_dim);

/// Rays whose orthogonal companions in the list do not span their full
/// orthogonal complement; principal orthogonals of such rays are not faithful
/// to the subspace picture.
std::vector<std::string> ray_set_warnings(const std::vector<RationalVector>& rays, std::size_t ambient_dim);

inline constexpr std::size_t kMaxEnumerationSize = 4;

/// Streams every Q-structure on {0, ..., n-1} with unit 0, over every dot
/// table (unit row and column forced) and every garbage subset, in a fixed
/// order. No isomorphism reduction. Single consumer.
class QStructureEnumerator {
 public:
  /// Throws ResourceError for n > 4 (use random_qstructure instead) or n == 0.
  explicit QStructureEnumerator(std::size_t n);

  std::optional<QStructure> next();

  std::uint64_t candidates_examined() const { return examined_; }
  std::uint64_t yielded() const { return yielded_; }

 private:
  bool advance();

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::size_t> free_cells_;
  std::uint64_t garbage_ = 0;
  bool exhausted_ = false;
  bool started_ = false;
  std::uint64_t examined_ = 0;
  std::uint64_t yielded_ = 0;
};

std::uint64_t count_qstructures(std::size_t n);

/// Structure number `index` (0-based) of the enumeration order.
QStructure enumerated_qstructure(std::size_t n, std::uint64_t index);

struct RandomModelOptions {
  bool projective = false;
  /// Z may contain the unit (adversarial testing only).
  bool allow_unit_in_garbage = false;
  /// Z = ∅ makes every nonempty set's orthogonal empty, leaving only the
  /// facts ∅ and P; such draws are rejected unless allowed.
  bool allow_empty_garbage = false;
  std::uint64_t max_attempts = 1'000'000;
};

struct SampledStructure {
  QStructure structure;
  std::uint64_t attempts;
};

/// Rejection-samples dot tables and garbage sets until the axioms hold (and
/// projectivity, when requested). Deterministic in the seed.
/// Throws SamplingError when the attempt budget runs out.
SampledStructure random_qstructure(std::size_t size, std::uint64_t seed, const RandomModelOptions& options = {});

/// Uniform choice from all_facts(q).
Fact random_fact(const QStructure& q, std::uint64_t seed);
Fact random_fact(const std::vector<Fact>& facts, Rng& rng);

struct ModelRecipe {
  enum class Kind { Classical, Ray, Random, Enumerated };

  Kind kind = Kind::Classical;
  std::vector<std::string> variables;
  std::vector<RationalVector> rays;
  std::size_t ambient_dim = 0;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  RandomModelOptions random_options;
};

QStructure build_model(const ModelRecipe& recipe);

}  // namespace qlogic
