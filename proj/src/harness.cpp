#include "qlogic/harness.hpp"

#include <sstream>

#include "qlogic/errors.hpp"
#include "qlogic/models.hpp"

namespace qlogic {

namespace {

constexpr std::size_t kRandomPoolPerSize = 16;
const char* const kAtoms[] = {"a", "b", "c"};

struct PooledModel {
  QStructure structure;
  std::vector<Fact> facts;
};

std::vector<PooledModel> enumerated_pool(bool projective) {
  std::vector<PooledModel> pool;
  for (std::size_t n = 1; n <= 3; ++n) {
    QStructureEnumerator e(n);
    while (auto q = e.next()) {
      if (projective && !is_projective(*q)) continue;
      pool.push_back({*q, all_facts(*q)});
    }
  }
  return pool;
}

std::vector<PooledModel> random_pool(std::uint64_t seed, bool projective) {
  std::vector<PooledModel> pool;
  RandomModelOptions options;
  options.projective = projective;
  for (std::size_t n : {std::size_t{4}, std::size_t{5}}) {
    for (std::size_t i = 0; i < kRandomPoolPerSize; ++i) {
      auto q = random_qstructure(n, Rng::derive(seed, n * 1000 + i), options).structure;
      pool.push_back({q, all_facts(q)});
    }
  }
  return pool;
}

Formula random_formula(Rng& rng, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    switch (rng.below(8)) {
      case 0:
        return Formula::one();
      case 1:
        return Formula::top();
      case 2:
        return Formula::negation(Formula::one());
      case 3:
        return Formula::negation(Formula::atom(kAtoms[rng.below(3)]));
      default:
        return Formula::atom(kAtoms[rng.below(3)]);
    }
  }
  const auto pick = rng.below(5);
  if (pick == 4) return Formula::negation(random_formula(rng, depth - 1));
  static constexpr Connective kBinary[] = {Connective::Tensor, Connective::Par, Connective::With, Connective::Plus};
  return Formula::binary(kBinary[pick], random_formula(rng, depth - 1), random_formula(rng, depth - 1));
}

/// For a premise "|- x, y", sometimes picks x so that the premise is an
/// axiom instance; otherwise most random premises are invalid and the trial
/// is vacuous.
Formula partner(Rng& rng, const Formula& y) {
  switch (rng.below(6)) {
    case 0:
    case 1:
      return nnf(Formula::negation(y));
    case 2:
      return Formula::top();
    default:
      return random_formula(rng, 2);
  }
}

struct Instance {
  std::vector<Sequent> premises;
  Sequent conclusion;
};

Instance random_instance(RuleTag rule, Rng& rng) {
  auto f = [&] { return random_formula(rng, 2); };
  auto seq = [](std::vector<Formula> fs) { return Sequent::right(std::move(fs)); };
  switch (rule) {
    case RuleTag::AxId: {
      auto a = f();
      return {{}, seq({Formula::negation(a), a})};
    }
    case RuleTag::AxTop:
      return {{}, seq({Formula::top(), f()})};
    case RuleTag::AxOne:
      return {{}, seq({Formula::one()})};
    case RuleTag::Cut: {
      auto a = f();
      auto b = rng.coin() ? nnf(Formula::negation(a)) : f();
      auto c = rng.coin() ? a : f();
      return {{seq({a, b}), seq({Formula::negation(a), c})}, seq({b, c})};
    }
    case RuleTag::Ex1: {
      auto a2 = f();
      auto a1 = partner(rng, a2);
      return {{seq({a1, a2})}, seq({a2, a1})};
    }
    case RuleTag::Ex2: {
      auto a1 = f(), a2 = f(), a3 = f();
      if (rng.coin()) a3 = nnf(Formula::negation(Formula::par(a1, a2)));
      return {{seq({a1, a2, a3})}, seq({a3, a2, a1})};
    }
    case RuleTag::WithR: {
      auto c = f();
      auto a = partner(rng, c), b = partner(rng, c);
      return {{seq({a, c}), seq({b, c})}, seq({Formula::with(a, b), c})};
    }
    case RuleTag::Plus1:
    case RuleTag::Plus2: {
      auto c = f();
      auto a = partner(rng, c), b = f();
      auto sum = rule == RuleTag::Plus1 ? Formula::plus(a, b) : Formula::plus(b, a);
      return {{seq({a, c})}, seq({sum, c})};
    }
    case RuleTag::BotR: {
      auto a = rng.coin() ? f() : Formula::par(Formula::negation(Formula::atom("a")), Formula::atom("a"));
      return {{seq({a})}, seq({Formula::negation(Formula::one()), a})};
    }
    case RuleTag::TensorR: {
      auto c = f(), d = f();
      auto a = partner(rng, c), b = partner(rng, d);
      return {{seq({a, c}), seq({b, d})}, seq({c, d, Formula::tensor(a, b)})};
    }
    case RuleTag::ParR: {
      std::vector<Formula> premise{f(), f()};
      const auto extra = rng.below(3);
      for (std::uint64_t i = 0; i < extra; ++i) premise.push_back(f());
      if (rng.coin()) premise[1] = nnf(Formula::negation(premise[0]));
      std::vector<Formula> conclusion{Formula::par(premise[0], premise[1])};
      conclusion.insert(conclusion.end(), premise.begin() + 2, premise.end());
      return {{seq(premise)}, seq(conclusion)};
    }
    case RuleTag::WR: {
      auto a = rng.coin() ? f() : Formula::one();
      return {{seq({a})}, seq({a, f()})};
    }
  }
  throw UsageError("unknown rule");
}

}  // namespace

std::string_view model_class_name(ModelClass m) {
  switch (m) {
    case ModelClass::Auto:
      return "auto";
    case ModelClass::Unconstrained:
      return "unconstrained";
    case ModelClass::Projective:
      return "projective";
  }
  return "unknown";
}

std::optional<ModelClass> parse_model_class(std::string_view name) {
  for (auto m : {ModelClass::Auto, ModelClass::Unconstrained, ModelClass::Projective}) {
    if (model_class_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string HarnessViolation::describe() const {
  std::ostringstream os;
  os << "trial " << trial << ": premises";
  for (const auto& p : premises) os << " [" << to_string(p) << "]";
  os << " valid but conclusion [" << to_string(conclusion) << "] invalid; Z = " << structure.format(structure.garbage())
     << ", dot = [";
  for (std::size_t i = 0; i < structure.table().size(); ++i) os << (i ? "," : "") << structure.table()[i];
  os << "]";
  for (const auto& [atom, fact] : assignment) os << ", " << atom << " = " << structure.format(fact.members());
  return os.str();
}

std::string HarnessReport::summary() const {
  std::ostringstream os;
  os << "rule " << rule_name(rule) << " (" << mode_name(mode) << " mode, "
     << (projective_models ? "projective" : "unconstrained") << " models): " << trials << " trials, " << vacuous
     << " vacuous, " << violations.size() << " violation(s)";
  return os.str();
}

HarnessReport soundness_harness(const HarnessOptions& options) {
  if (options.trials == 0) throw UsageError("soundness_harness needs at least one trial");
  HarnessReport report;
  report.rule = options.rule;
  // The instances themselves are legal in the calculus that owns the rule.
  const CalculusMode schema_mode = options.rule == RuleTag::WR ? CalculusMode::Projective : options.mode;
  report.mode = schema_mode;
  report.projective_models =
      options.models == ModelClass::Projective ||
      (options.models == ModelClass::Auto && (options.mode == CalculusMode::Projective || options.rule == RuleTag::WR));

  const auto enumerated = enumerated_pool(report.projective_models);
  const auto random = random_pool(options.seed, report.projective_models);

  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(Rng::derive(options.seed, t));
    const auto& pool = rng.coin() ? enumerated : random;
    const PooledModel& model = pool[rng.below(pool.size())];
    Assignment asg;
    for (const char* a : kAtoms) asg.emplace(a, random_fact(model.facts, rng));
    Instance inst = random_instance(options.rule, rng);
    if (auto e = check_step(options.rule, inst.premises, inst.conclusion, schema_mode)) {
      throw std::logic_error("harness built an ill-formed instance: " + e->describe());
    }
    ++report.trials;
    bool premises_hold = true;
    for (const auto& p : inst.premises) premises_hold = premises_hold && sequent_valid(model.structure, asg, p);
    if (!premises_hold) {
      ++report.vacuous;
      continue;
    }
    if (!sequent_valid(model.structure, asg, inst.conclusion)) {
      report.violations.push_back({t, model.structure, asg, inst.premises, inst.conclusion});
    }
  }
  return report;
}

bool replay_violation(const HarnessViolation& v) {
  for (const auto& p : v.premises) {
    if (!sequent_valid(v.structure, v.assignment, p)) return false;
  }
  return !sequent_valid(v.structure, v.assignment, v.conclusion);
}

}  // namespace qlogic
