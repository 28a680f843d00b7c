// One line per acceptance criterion: PASS/FAIL, the criterion, and details.
// All checks are exact set or subspace equalities (zero tolerance); runtime
// limits are wall-clock seconds on the whole criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "qlogic/falsify.hpp"
#include "qlogic/harness.hpp"
#include "qlogic/models.hpp"
#include "qlogic/search.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/lemmas.hpp"
#include "support/oracles.hpp"

using namespace qlogic;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) v.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s");
  if (!v.pass) ++failures;
  std::printf("%s  %2d. %s (%.2f s%s) %s\n", v.pass ? "PASS" : "FAIL", number, title, secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              v.detail.str().c_str());
  std::fflush(stdout);
}

QStructure mutate(const QStructure& q, Rng& rng) {
  auto table = q.table();
  const std::size_t n = q.size();
  const std::size_t cell = rng.below(n * n);
  Element value;
  do {
    value = static_cast<Element>(rng.below(n));
  } while (value == table[cell]);
  table[cell] = value;
  return QStructure(n, q.unit(), table, q.garbage(), q.labels());
}

}  // namespace

int main() {
  const QStructure c1 = fixtures::c1();
  const QStructure b1 = fixtures::b1();

  criterion(1, "structure validation and 1000 single-cell mutations", 5, [&](Verdict& v) {
    v.require(validate(c1).ok() && validate(b1).ok(), "C1 and B1 valid");
    Rng rng(1);
    std::size_t still_valid = 0, rejected = 0, mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
      const QStructure m = mutate(t % 2 ? b1 : c1, rng);
      std::set<std::string> named;
      for (const auto& viol : validate(m).violations) named.insert(std::string(condition_name(viol.condition)));
      const auto expected = oracle::violated(oracle::RawModel::of(m));
      if (named != expected) ++mismatches;
      (named.empty() ? still_valid : rejected)++;
    }
    v.detail << still_valid << " still valid, " << rejected << " rejected, " << mismatches << " mismatches vs triple scan";
    v.require(mismatches == 0, "condition names match the oracle");
  });

  criterion(2, "closure-operator laws over all subsets of C1 and B1", 0, [&](Verdict& v) {
    lemmas::Failures f = lemmas::closure_laws(c1);
    f.merge(lemmas::closure_laws(b1));
    v.detail << f.total() << " failures over 16 + 64 subsets";
    if (!f.empty()) v.detail << ": " << f.describe();
    v.require(f.empty(), "zero failures");
  });

  criterion(3, "connective lemmas on C1, B1 and 100 random structures of sizes 3-5", 60, [&](Verdict& v) {
    std::vector<std::pair<std::string, QStructure>> models{{"C1", c1}, {"B1", b1}};
    for (std::uint64_t i = 0; i < 100; ++i) {
      models.emplace_back("random(" + std::to_string(3 + i % 3) + ", seed " + std::to_string(i) + ")",
                          random_qstructure(3 + i % 3, i).structure);
    }
    lemmas::Failures all;
    std::vector<std::string> failing;
    for (const auto& [name, q] : models) {
      lemmas::Failures f = lemmas::connective_laws(q);
      f.merge(lemmas::product_law(q));
      if (!f.empty()) failing.push_back(name);
      all.merge(f);
    }
    v.detail << all.total() << " failures in " << failing.size() << " of " << models.size() << " structures";
    if (!all.empty()) {
      v.detail << " (first: " << failing.front() << "): " << all.describe();
    }
    v.require(all.empty(), "zero failures");
  });

  criterion(4, "B1 tensor non-associativity and half-neutrality witnesses", 0, [&](Verdict& v) {
    const Fact f = fixtures::fact(b1, {"0", "r0"}), g = fixtures::fact(b1, {"0", "r+"}), h = fixtures::fact(b1, {"0", "r1"});
    const Fact left = tensor(tensor(f, g), h), right = tensor(f, tensor(g, h)), with_one = tensor(f, one_fact(b1));
    v.detail << "(F*G)*H = " << b1.format(left.members()) << ", F*(G*H) = " << b1.format(right.members())
             << ", F*1 = " << b1.format(with_one.members());
    v.require(left.members() == fixtures::set(b1, {"0", "r1"}), "(F*G)*H = {0,r1}");
    v.require(right.members() == fixtures::set(b1, {"0"}), "F*(G*H) = {0}");
    v.require(with_one.members() == b1.carrier() && with_one != f, "F*1 = P != F");
  });

  criterion(5, "subspace orthogonality lemma on 500 triples in Q^4 and the Q^2 witness", 10, [&](Verdict& v) {
    std::size_t pass = 0;
    for (std::uint64_t t = 0; t < 500; ++t) {
      Rng rng(Rng::derive(7, t));
      const Subspace a = random_subspace(4, rng), b = random_subspace(4, rng), c = random_subspace(4, rng);
      const bool item1 = is_zero(project_subspace(a, b)) == is_zero(project_subspace(b, a));
      const bool item2 =
          is_zero(project_subspace(project_subspace(a, b), c)) == is_zero(project_subspace(a, project_subspace(c, b)));
      pass += item1 && item2;
    }
    const Subspace a = parse_subspace("1,0"), b = parse_subspace("1,1"), c = parse_subspace("0,1");
    const Subspace left = project_subspace(project_subspace(a, b), c), right = project_subspace(a, project_subspace(b, c));
    v.detail << pass << "/500 triples pass; (A.B).C = " << to_string(left) << ", A.(B.C) = " << to_string(right);
    v.require(pass == 500, "all triples");
    v.require(left == parse_subspace("0,1") && is_zero(right), "witness");
  });

  criterion(6, "soundness harness: 12 plain rules, WR projective and unconstrained", 0, [&](Verdict& v) {
    std::size_t violations = 0, vacuous = 0;
    for (RuleTag r : kAllRules) {
      if (r == RuleTag::WR) continue;
      HarnessOptions opts;
      opts.rule = r;
      opts.trials = 1000;
      opts.seed = 1;
      const auto report = soundness_harness(opts);
      violations += report.violations.size();
      vacuous += report.vacuous;
      if (!report.ok()) v.detail << report.summary() << "; ";
    }
    HarnessOptions wr;
    wr.rule = RuleTag::WR;
    wr.trials = 1000;
    wr.seed = 1;
    wr.mode = CalculusMode::Projective;
    const auto projective = soundness_harness(wr);
    wr.models = ModelClass::Unconstrained;
    wr.trials = 10000;
    const auto unconstrained = soundness_harness(wr);
    const bool replayable = !unconstrained.ok() && replay_violation(unconstrained.violations.front());
    v.detail << "plain rules: 12000 trials, " << vacuous << " vacuous, " << violations << " violations; WR projective: "
             << projective.violations.size() << " violations; WR unconstrained: " << unconstrained.violations.size()
             << " violations in 10000 trials"
             << (unconstrained.ok() ? "" : ", first at trial " + std::to_string(unconstrained.violations.front().trial))
             << (replayable ? " (replayed)" : "");
    v.require(violations == 0, "plain rules sound");
    v.require(projective.ok(), "WR sound on projective models");
    v.require(replayable, "replayable WR violation on unconstrained models");
  });

  criterion(7, "projective laws on C1, B1 and 50 projective random structures", 0, [&](Verdict& v) {
    std::vector<std::pair<std::string, QStructure>> models{{"C1", c1}, {"B1", b1}};
    RandomModelOptions opts;
    opts.projective = true;
    for (std::uint64_t i = 0; i < 50; ++i) {
      models.emplace_back("projective random(" + std::to_string(3 + i % 3) + ", seed " + std::to_string(i) + ")",
                          random_qstructure(3 + i % 3, i, opts).structure);
    }
    lemmas::Failures all;
    std::vector<std::string> failing;
    std::size_t one_is_carrier = 0, z_is_zero = 0;
    for (const auto& [name, q] : models) {
      const auto f = lemmas::projective_laws(q);
      if (!f.empty()) failing.push_back(name);
      all.merge(f);
      one_is_carrier += one_fact(q) == top_fact(q);
      z_is_zero += z_fact(q) == zero_fact(q);
    }
    v.detail << "1 = P in " << one_is_carrier << "/" << models.size() << ", Z-fact = 0 in " << z_is_zero << "/"
             << models.size() << "; " << all.total() << " failures in " << failing.size() << " structures";
    if (!all.empty()) v.detail << " (first: " << failing.front() << "): " << all.describe();
    v.require(all.empty(), "zero failures");
    v.require(one_is_carrier == models.size() && z_is_zero == models.size(), "constants");
  });

  criterion(8, "right_normalize on 500 triples; falsify at size 6, budget 10^4", 0, [&](Verdict& v) {
    Rng rng(8);
    std::size_t disagreements = 0;
    for (int t = 0; t < 500; ++t) {
      const QStructure q = gen::structure(rng);
      const Assignment asg = gen::assignment(q, rng);
      const Sequent s = gen::sequent(rng, 3);
      disagreements += sequent_valid(q, asg, s) != sequent_valid(q, asg, right_normalize(s));
    }
    v.detail << disagreements << " disagreements; ";
    v.require(disagreements == 0, "right_normalize preserves validity");
    const FalsifyOptions opts{6, 0, 10000};
    const Sequent swap = parse_sequent("a*b |- b*a");
    const auto found = falsify(swap, opts);
    const bool countermodel =
        found.countermodel && !sequent_valid(found.countermodel->structure, found.countermodel->assignment, swap);
    v.detail << "a*b |- b*a: " << (countermodel ? "countermodel after " + std::to_string(found.probes) + " probes" : "none");
    v.require(countermodel, "countermodel for a*b |- b*a");
    for (const char* text : {"|- ~a, a", "a & b |- a", "a |- a + b"}) {
      const auto r = falsify(parse_sequent(text), opts);
      v.detail << "; " << text << ": " << (r.inconclusive() ? "none" : "countermodel") << " in " << r.probes;
      v.require(r.inconclusive(), std::string("no countermodel for ") + text);
    }
  });

  criterion(9, "proof kernel: bundled derivations, 20 malformed trees, search", 0, [&](Verdict& v) {
    std::size_t accepted = 0;
    for (const char* f : {"axid.json", "ex1_axid.json", "tensor.json"}) {
      const ProofTree t = proof_from_json(read_json_file(fixtures::path(std::string("proofs/") + f)));
      accepted += !check_proof(t, CalculusMode::Plain);
    }
    const ProofTree tensor_tree = proof_from_json(read_json_file(fixtures::path("proofs/tensor.json")));
    v.require(tensor_tree.rule == RuleTag::TensorR && tensor_tree.conclusion.succedents.back().is(Connective::Tensor),
              "tensor example ends in C, D, A*B");
    const Json cases = read_json_file(fixtures::path("proofs/malformed.json")).at("cases");
    std::size_t located = 0;
    for (const auto& c : cases) {
      const auto e = check_proof(proof_from_json(c.at("proof")), *parse_mode(c.at("mode").get<std::string>()));
      located += e && error_kind_name(e->kind) == c.at("expect").at("kind").get<std::string>() &&
                 e->path == c.at("expect").at("path").get<std::vector<std::size_t>>();
    }
    v.detail << accepted << "/3 derivations accepted, " << located << "/" << cases.size() << " malformed trees located";
    v.require(accepted == 3, "derivations accepted");
    v.require(cases.size() == 20 && located == 20, "malformed trees rejected at the right node");

    const auto ax = search(parse_sequent("|- ~a, a"), {1, CalculusMode::Plain, false});
    const auto swapped = search(parse_sequent("|- a, ~a"), {2, CalculusMode::Plain, false});
    v.detail << "; |- ~a, a: " << (ax ? "height " + std::to_string(ax->height()) : "not found")
             << "; |- a, ~a within depth 2: " << (swapped ? "height " + std::to_string(swapped->height()) : "not found");
    v.require(ax && ax->rule == RuleTag::AxId, "|- ~a, a at depth 1");
    v.require(swapped.has_value(), "|- a, ~a within depth 2");

    Rng rng(9);
    std::size_t found = 0, rechecked = 0;
    std::vector<Sequent> goals{parse_sequent("|- ~a, a"), parse_sequent("|- a, ~a"), parse_sequent("(a & b) |- a"),
                               parse_sequent("a |- a + b"), parse_sequent("a, b |- a * b")};
    for (int t = 0; t < 100; ++t) goals.push_back(gen::sequent(rng, 2));
    for (const Sequent& g : goals) {
      for (CalculusMode mode : {CalculusMode::Plain, CalculusMode::Projective}) {
        const auto p = search(proof_goal(g), {5, mode, false});
        if (!p) continue;
        ++found;
        rechecked += !check_proof(*p, mode);
      }
    }
    v.detail << "; " << rechecked << "/" << found << " search results re-check";
    v.require(found == rechecked, "every search result re-checks");
  });

  criterion(10, "fact census against the 2^n oracle", 0, [&](Verdict& v) {
    const QStructure cpq = classical_model({"p", "q"});
    const std::size_t n1 = all_facts(c1).size(), n2 = all_facts(b1).size(), n3 = all_facts(cpq).size();
    const std::size_t o1 = oracle::facts(oracle::RawModel::of(c1)).size();
    const std::size_t o2 = oracle::facts(oracle::RawModel::of(b1)).size();
    const std::size_t o3 = oracle::facts(oracle::RawModel::of(cpq)).size();
    v.detail << "C1 " << n1 << " (oracle " << o1 << "), B1 " << n2 << " (oracle " << o2 << "), classical [p,q] " << n3
             << " (oracle " << o3 << ")";
    v.require(n1 == 4 && n2 == 6 && n3 == 16, "pinned counts");
    v.require(n1 == o1 && n2 == o2 && n3 == o3, "oracle agreement");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
