#include "qlogic/models.hpp"

#include <set>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

bool raw_axioms_hold(std::size_t n, const std::vector<Element>& dot, std::uint64_t garbage) {
  auto at = [&](Element x, Element y) { return dot[x * n + y]; };
  auto in_z = [&](Element e) { return ((garbage >> e) & 1U) != 0; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (in_z(at(x, y)) != in_z(at(y, x))) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (in_z(at(xy, z)) != in_z(at(x, at(z, y)))) return false;
      }
    }
  }
  return true;
}

bool raw_projective(std::size_t n, const std::vector<Element>& dot, std::uint64_t garbage) {
  for (Element z = 0; z < n; ++z) {
    if (((garbage >> z) & 1U) == 0) continue;
    for (Element y = 0; y < n; ++y) {
      if (((garbage >> dot[z * n + y]) & 1U) == 0) return false;
    }
  }
  return true;
}

/// Dot table on {0..n-1} with unit 0: row 0 and column 0 are the identity.
std::vector<Element> unit_table(std::size_t n) {
  std::vector<Element> t(n * n, 0);
  for (Element i = 0; i < n; ++i) {
    t[i] = i;
    t[i * n] = i;
  }
  return t;
}

}  // namespace

QStructure classical_model(const std::vector<std::string>& variables) {
  if (variables.size() > 4) {
    throw ResourceError("classical_model supports at most 4 variables (carrier 2^|V| + 2), got " +
                        std::to_string(variables.size()));
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v).second) throw UsageError("duplicate variable '" + v + "'");
  }
  const std::size_t models = std::size_t{1} << variables.size();
  const std::size_t n = models + 2;
  const auto zero = static_cast<Element>(n - 1);

  std::vector<std::string> labels{"1"};
  for (std::size_t m = 0; m < models; ++m) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if ((m >> i) & 1U) {
        label += (first ? "" : ",") + variables[i];
        first = false;
      }
    }
    labels.push_back(label + "}");
  }
  labels.push_back("0");

  std::vector<Element> dot(n * n, zero);
  for (Element x = 0; x < n; ++x) {
    dot[x] = x;
    dot[x * n] = x;
  }
  for (Element m = 1; m <= models; ++m) dot[m * n + m] = m;
  return QStructure(n, 0, std::move(dot), ElementSet{zero}, std::move(labels));
}

QStructure ray_model(const std::vector<RationalVector>& rays, std::size_t ambient_dim) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].dim() != ambient_dim) {
      throw UsageError("ray " + std::to_string(i) + " has dimension " + std::to_string(rays[i].dim()) +
                       ", expected " + std::to_string(ambient_dim));
    }
    if (rays[i].is_zero()) throw UsageError("ray " + std::to_string(i) + " is the zero vector");
    for (std::size_t j = 0; j < i; ++j) {
      if (span(ambient_dim, {rays[i], rays[j]}).rank() < 2) {
        throw UsageError("rays " + std::to_string(j) + " and " + std::to_string(i) + " are collinear");
      }
    }
  }
  const std::size_t k = rays.size();
  const std::size_t n = k + 2;
  const auto zero = static_cast<Element>(n - 1);
  std::vector<Element> dot(n * n, zero);
  for (Element x = 0; x < n; ++x) {
    dot[x] = x;
    dot[x * n] = x;
  }
  for (Element x = 1; x <= k; ++x) {
    for (Element y = 1; y <= k; ++y) dot[x * n + y] = inner(rays[x - 1], rays[y - 1]) != 0 ? y : zero;
  }
  std::vector<std::string> labels{"H"};
  for (std::size_t i = 0; i < k; ++i) labels.push_back("r" + std::to_string(i));
  labels.push_back("0");
  return QStructure(n, 0, std::move(dot), ElementSet{zero}, std::move(labels));
}

std::vector<std::string> ray_set_warnings(const std::vector<RationalVector>& rays, std::size_t ambient_dim) {
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<RationalVector> companions;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (inner(rays[i], rays[j]) == 0) companions.push_back(rays[j]);
    }
    const auto complement = ortho_complement(span(ambient_dim, {rays[i]}));
    if (!(span(ambient_dim, companions) == complement)) {
      warnings.push_back("ray r" + std::to_string(i) + " " + to_string(rays[i]) +
                         ": the listed rays orthogonal to it do not span its orthogonal complement");
    }
  }
  return warnings;
}

QStructureEnumerator::QStructureEnumerator(std::size_t n) : n_(n) {
  if (n == 0) throw UsageError("enumeration needs at least one element");
  if (n > kMaxEnumerationSize) {
    throw ResourceError("exhaustive enumeration is limited to size " + std::to_string(kMaxEnumerationSize) +
                        "; use random_qstructure for size " + std::to_string(n));
  }
  table_ = unit_table(n);
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      free_cells_.push_back(x * n + y);
      table_[x * n + y] = 0;
    }
  }
}

bool QStructureEnumerator::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  if (++garbage_ < (std::uint64_t{1} << n_)) return true;
  garbage_ = 0;
  for (std::size_t cell : free_cells_) {
    if (++table_[cell] < n_) return true;
    table_[cell] = 0;
  }
  return false;
}

std::optional<QStructure> QStructureEnumerator::next() {
  while (!exhausted_) {
    if (!advance()) {
      exhausted_ = true;
      break;
    }
    ++examined_;
    if (raw_axioms_hold(n_, table_, garbage_)) {
      ++yielded_;
      return QStructure(n_, 0, table_, ElementSet::from_bits(garbage_));
    }
  }
  return std::nullopt;
}

std::uint64_t count_qstructures(std::size_t n) {
  QStructureEnumerator e(n);
  while (e.next()) {
  }
  return e.yielded();
}

QStructure enumerated_qstructure(std::size_t n, std::uint64_t index) {
  QStructureEnumerator e(n);
  for (std::uint64_t i = 0;; ++i) {
    auto q = e.next();
    if (!q) {
      throw UsageError("enumeration of size " + std::to_string(n) + " has only " + std::to_string(i) +
                       " structures, index " + std::to_string(index) + " requested");
    }
    if (i == index) return *q;
  }
}

SampledStructure random_qstructure(std::size_t size, std::uint64_t seed, const RandomModelOptions& options) {
  if (size == 0) throw UsageError("random_qstructure needs size >= 1");
  if (size > ElementSet::kMaxElements) throw ResourceError("random_qstructure size exceeds the 64-element limit");
  Rng rng(seed);
  std::vector<Element> table = unit_table(size);
  std::uint64_t rejected_empty = 0;
  std::uint64_t rejected_axioms = 0;
  std::uint64_t rejected_projective = 0;
  for (std::uint64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    for (std::size_t x = 1; x < size; ++x) {
      for (std::size_t y = 1; y < size; ++y) table[x * size + y] = static_cast<Element>(rng.below(size));
    }
    std::uint64_t garbage = 0;
    for (Element e = 0; e < size; ++e) {
      if (e == 0 && !options.allow_unit_in_garbage) continue;
      if (rng.coin()) garbage |= std::uint64_t{1} << e;
    }
    if (garbage == 0 && !options.allow_empty_garbage) {
      ++rejected_empty;
      continue;
    }
    if (!raw_axioms_hold(size, table, garbage)) {
      ++rejected_axioms;
      continue;
    }
    if (options.projective && !raw_projective(size, table, garbage)) {
      ++rejected_projective;
      continue;
    }
    return {QStructure(size, 0, table, ElementSet::from_bits(garbage)), attempt};
  }
  throw SamplingError("random_qstructure(size=" + std::to_string(size) + ", seed=" + std::to_string(seed) +
                      ") exhausted " + std::to_string(options.max_attempts) + " attempts: " +
                      std::to_string(rejected_empty) + " empty garbage, " + std::to_string(rejected_axioms) +
                      " axiom failures, " + std::to_string(rejected_projective) + " non-projective");
}

Fact random_fact(const std::vector<Fact>& facts, Rng& rng) {
  if (facts.empty()) throw UsageError("random_fact: empty fact list");
  return facts[rng.below(facts.size())];
}

Fact random_fact(const QStructure& q, std::uint64_t seed) {
  Rng rng(seed);
  return random_fact(all_facts(q), rng);
}

QStructure build_model(const ModelRecipe& recipe) {
  switch (recipe.kind) {
    case ModelRecipe::Kind::Classical:
      return classical_model(recipe.variables);
    case ModelRecipe::Kind::Ray:
      return ray_model(recipe.rays, recipe.ambient_dim);
    case ModelRecipe::Kind::Random:
      return random_qstructure(recipe.size, recipe.seed, recipe.random_options).structure;
    case ModelRecipe::Kind::Enumerated:
      return enumerated_qstructure(recipe.size, recipe.index);
  }
  throw UsageError("unknown recipe kind");
}

}  // namespace qlogic
