#include "qlogic/falsify.hpp"

#include <algorithm>
#include <sstream>

#include "qlogic/errors.hpp"
#include "qlogic/models.hpp"

namespace qlogic {

namespace {

constexpr std::uint64_t kAssignmentsPerRandomStructure = 8;

std::vector<std::string> atom_list(const Sequent& s) {
  const auto atoms = atoms_of(s);
  return {atoms.begin(), atoms.end()};
}

Assignment assignment_by_index(const std::vector<std::string>& atoms, const std::vector<Fact>& facts,
                               std::uint64_t index) {
  Assignment asg;
  for (const auto& a : atoms) {
    asg.emplace(a, facts[index % facts.size()]);
    index /= facts.size();
  }
  return asg;
}

Assignment assignment_by_seed(const std::vector<std::string>& atoms, const std::vector<Fact>& facts,
                              std::uint64_t seed) {
  Rng rng(seed);
  Assignment asg;
  for (const auto& a : atoms) asg.emplace(a, random_fact(facts, rng));
  return asg;
}

std::uint64_t assignment_count(std::size_t facts, std::size_t atoms, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms && total <= cap; ++i) total *= facts;
  return std::min(total, cap + 1);
}

}  // namespace

std::string ReplayCertificate::describe() const {
  std::ostringstream os;
  if (phase == Phase::Enumerated) {
    os << "enumerated size=" << size << " index=" << index << " assignment_index=" << assignment_index;
  } else {
    os << "random size=" << size << " structure_seed=" << structure_seed << " assignment_seed=" << assignment_seed;
  }
  os << " probe=" << probe;
  return os.str();
}

FalsifyResult falsify(const Sequent& s, const FalsifyOptions& options) {
  if (options.max_size == 0) throw UsageError("falsify: max_size must be positive");
  const auto atoms = atom_list(s);
  FalsifyResult result;
  const std::uint64_t enumerated_budget = options.budget / 2;

  for (std::size_t n = 1; n <= std::min(kMaxEnumerationSize, options.max_size); ++n) {
    QStructureEnumerator structures(n);
    for (std::uint64_t index = 0; result.probes < enumerated_budget; ++index) {
      auto q = structures.next();
      if (!q) break;
      const auto facts = all_facts(*q);
      const auto total = assignment_count(facts.size(), atoms.size(), enumerated_budget);
      for (std::uint64_t a = 0; a < total && result.probes < enumerated_budget; ++a) {
        ++result.probes;
        auto asg = assignment_by_index(atoms, facts, a);
        if (!sequent_valid(*q, asg, s)) {
          ReplayCertificate cert;
          cert.phase = ReplayCertificate::Phase::Enumerated;
          cert.size = n;
          cert.index = index;
          cert.assignment_index = a;
          cert.probe = result.probes - 1;
          result.countermodel = Countermodel{*q, std::move(asg), cert};
          return result;
        }
      }
    }
  }

  // Random structures need a non-unit garbage element, hence size >= 2.
  if (options.max_size < 2) return result;
  const std::size_t min_size = 2;
  const std::size_t span = options.max_size - min_size + 1;
  for (std::uint64_t draw = 0; result.probes < options.budget; ++draw) {
    const std::size_t n = min_size + static_cast<std::size_t>(draw % span);
    const std::uint64_t structure_seed = Rng::derive(options.seed, draw);
    const QStructure q = random_qstructure(n, structure_seed).structure;
    const auto facts = all_facts(q);
    for (std::uint64_t k = 0; k < kAssignmentsPerRandomStructure && result.probes < options.budget; ++k) {
      const std::uint64_t assignment_seed = Rng::derive(structure_seed, k);
      ++result.probes;
      auto asg = assignment_by_seed(atoms, facts, assignment_seed);
      if (!sequent_valid(q, asg, s)) {
        ReplayCertificate cert;
        cert.phase = ReplayCertificate::Phase::Random;
        cert.size = n;
        cert.structure_seed = structure_seed;
        cert.assignment_seed = assignment_seed;
        cert.probe = result.probes - 1;
        result.countermodel = Countermodel{q, std::move(asg), cert};
        return result;
      }
    }
  }
  return result;
}

Countermodel replay(const Sequent& s, const ReplayCertificate& certificate) {
  const auto atoms = atom_list(s);
  if (certificate.phase == ReplayCertificate::Phase::Enumerated) {
    QStructure q = enumerated_qstructure(certificate.size, certificate.index);
    auto asg = assignment_by_index(atoms, all_facts(q), certificate.assignment_index);
    return {q, std::move(asg), certificate};
  }
  QStructure q = random_qstructure(certificate.size, certificate.structure_seed).structure;
  auto asg = assignment_by_seed(atoms, all_facts(q), certificate.assignment_seed);
  return {q, std::move(asg), certificate};
}

}  // namespace qlogic
