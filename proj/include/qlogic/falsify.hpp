#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlogic/sequent.hpp"

namespace qlogic {

struct FalsifyOptions {
  std::size_t max_size = 6;
  std::uint64_t seed = 0;
  /// Number of (structure, assignment) probes.
  std::uint64_t budget = 10'000;
};

/// How to rebuild the countermodel: either structure `index` of the size-`size`
/// enumeration, or random_qstructure(size, structure_seed); the assignment is
/// the `assignment_index`-th in mixed-radix order over all_facts (enumerated
/// phase) or drawn from Rng(assignment_seed) (random phase).
struct ReplayCertificate {
  enum class Phase { Enumerated, Random };
  Phase phase = Phase::Enumerated;
  std::size_t size = 0;
  std::uint64_t index = 0;
  std::uint64_t structure_seed = 0;
  std::uint64_t assignment_index = 0;
  std::uint64_t assignment_seed = 0;
  std::uint64_t probe = 0;

  std::string describe() const;
};

struct Countermodel {
  QStructure structure;
  Assignment assignment;
  ReplayCertificate certificate;
};

struct FalsifyResult {
  std::optional<Countermodel> countermodel;
  std::uint64_t probes = 0;

  /// No countermodel within budget; this is not a validity proof.
  bool inconclusive() const { return !countermodel.has_value(); }
};

/// Probes enumerated structures of size <= min(4, max_size) with every
/// assignment (at most half the budget), then seeded random structures of
/// sizes 2..max_size with random assignments. Returns the first probe where
/// the sequent is invalid.
FalsifyResult falsify(const Sequent& s, const FalsifyOptions& options = {});

/// Rebuilds the model and assignment named by a certificate.
Countermodel replay(const Sequent& s, const ReplayCertificate& certificate);

}  // namespace qlogic
