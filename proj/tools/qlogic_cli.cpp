// qlogic: command-line front end for Q-structures, facts, sequents and proofs.
//
// Exit status: 0 success/valid/ok, 1 semantic failure (invalid, violation,
// not found), 2 input error.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/falsify.hpp"
#include "qlogic/harness.hpp"
#include "qlogic/models.hpp"
#include "qlogic/search.hpp"
#include "qlogic/serialization.hpp"

namespace fs = std::filesystem;
using namespace qlogic;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

// Accepts strict JSON or the shorthand {a: [e0, ep]}, where bare words are
// taken as strings (labels, or indices when no label matches).
Json relaxed_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
  }
  std::string out;
  bool in_string = false;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    const bool literal = word == "true" || word == "false" || word == "null";
    out += literal ? word : "\"" + word + "\"";
    word.clear();
  };
  for (char c : text) {
    if (in_string) {
      out += c;
      if (c == '"') in_string = false;
    } else if (c == '"') {
      flush();
      in_string = true;
      out += c;
    } else if (std::string_view("{}[],: \t\r\n").find(c) != std::string_view::npos) {
      flush();
      out += c;
    } else {
      word += c;
    }
  }
  flush();
  return parse_json_text(out);
}

// A path to an assignment file, or the assignment itself inline.
Json assignment_source(const std::string& arg) {
  if (fs::is_regular_file(arg)) return read_json_file(arg);
  return relaxed_json(arg);
}

void write_json(const Json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(output);
  if (!out) throw UsageError("cannot write " + output);
  out << j.dump(2) << "\n";
  std::cout << "wrote " << output << "\n";
}

CalculusMode mode_flag(const std::string& text) {
  auto m = parse_mode(text);
  if (!m) throw UsageError("unknown mode '" + text + "' (expected plain or projective)");
  return *m;
}

void warn_on_ray_recipe(const Json& j) {
  if (!j.contains("recipe")) return;
  const auto& r = j.at("recipe");
  if (r.value("kind", std::string{}) != "ray") return;
  std::vector<RationalVector> rays;
  for (const auto& text : r.at("rays")) rays.push_back(parse_vector(text.get<std::string>()));
  for (const auto& w : ray_set_warnings(rays, r.at("ambient_dim").get<std::size_t>())) {
    std::cerr << "warning: " << w << "\n";
  }
}

NamedModel model_arg(const std::string& path) {
  const Json j = read_json_file(path);
  warn_on_ray_recipe(j);
  return model_from_json(j);
}

int cmd_validate(const std::string& path) {
  const auto [name, q] = model_arg(path);
  const auto report = validate(q);
  const std::string title = name.empty() ? path : name;
  if (report.ok()) {
    std::cout << title << ": valid Q-structure (" << q.size() << " elements, Z = " << q.format(q.garbage()) << ")\n";
  } else {
    std::cout << title << ": " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) std::cout << "  " << v.describe(q) << "\n";
  }
  std::cout << "Z equals the set of orthogonal products: " << (report.garbage_is_orthogonal_products ? "yes" : "no")
            << "\n";
  return report.ok() ? kOk : kFailure;
}

int cmd_facts(const std::string& path) {
  const auto [name, q] = model_arg(path);
  if (!satisfies_axioms(q)) {
    std::cerr << "not a Q-structure; run validate for details\n";
    return kFailure;
  }
  const Fact one = one_fact(q), zero = zero_fact(q), top = top_fact(q), z = z_fact(q);
  for (const Fact& f : all_facts(q)) {
    std::string tags;
    auto tag = [&](bool on, const char* t) {
      if (on) tags += std::string(tags.empty() ? "" : " ") + t;
    };
    tag(is_valid_fact(f), "valid");
    tag(f == one, "1");
    tag(f == zero, "0");
    tag(f == top, "T");
    tag(f == z, "Z");
    std::cout << q.format(f.members()) << (tags.empty() ? "" : "  [" + tags + "]") << "\n";
  }
  std::cerr << "projective: " << (is_projective(q) ? "yes" : "no") << (one == top ? "" : " (1 != T)") << "\n";
  return kOk;
}

int cmd_eval(const std::string& path, const std::string& asg_arg, const std::string& text) {
  const auto [name, q] = model_arg(path);
  const Assignment asg = assignment_from_json(q, assignment_source(asg_arg));
  std::cout << q.format(eval(q, asg, parse_formula(text)).members()) << "\n";
  return kOk;
}

int cmd_check(const std::string& path, const std::string& asg_arg, const std::string& text) {
  const auto [name, q] = model_arg(path);
  const Assignment asg = assignment_from_json(q, assignment_source(asg_arg));
  const bool valid = sequent_valid(q, asg, parse_sequent(text));
  std::cout << (valid ? "valid" : "invalid") << "\n";
  return valid ? kOk : kFailure;
}

int cmd_prove(const std::string& text, std::size_t depth, const std::string& mode, bool allow_cut,
              const std::string& output) {
  // A bare formula F is read as |- F.
  const Sequent goal = proof_goal(parse_sequent(text.find("|-") == std::string::npos ? "|- " + text : text));
  SearchOptions opts{depth, mode_flag(mode), allow_cut};
  const auto proof = search(goal, opts);
  if (!proof) {
    std::cout << "not found within depth " << depth << " (inconclusive)\n";
    return kFailure;
  }
  if (auto err = check_proof(*proof, opts.mode)) throw std::logic_error("search produced a bad proof: " + err->describe());
  write_json(proof_to_json(*proof), output);
  return kOk;
}

int cmd_check_proof(const std::string& path, const std::string& mode) {
  const ProofTree tree = proof_from_json(read_json_file(path));
  if (auto err = check_proof(tree, mode_flag(mode))) {
    std::cout << "error: " << err->describe() << "\n";
    return kFailure;
  }
  std::cout << "ok: " << to_string(tree.conclusion) << " (" << tree.node_count() << " nodes, height " << tree.height()
            << ")\n";
  return kOk;
}

int cmd_falsify(const std::string& text, const FalsifyOptions& opts, const std::string& output) {
  const Sequent s = parse_sequent(text);
  const auto result = falsify(s, opts);
  if (result.inconclusive()) {
    std::cout << "inconclusive: no countermodel in " << result.probes << " probes\n";
    return kFailure;
  }
  std::cerr << "countermodel after " << result.probes << " probes: " << result.countermodel->certificate.describe()
            << "\n";
  write_json(countermodel_to_json(s, *result.countermodel), output);
  return kOk;
}

int cmd_harness(const std::string& rule_text, std::size_t trials, std::uint64_t seed, const std::string& mode,
                const std::string& models) {
  HarnessOptions opts;
  const auto rule = parse_rule(rule_text);
  if (!rule) throw UsageError("unknown rule '" + rule_text + "'");
  const auto model_class = parse_model_class(models);
  if (!model_class) throw UsageError("unknown model class '" + models + "'");
  opts.rule = *rule;
  opts.trials = trials;
  opts.seed = seed;
  opts.mode = mode_flag(mode);
  opts.models = *model_class;
  const auto report = soundness_harness(opts);
  std::cout << report.summary() << "\n";
  if (!report.ok()) std::cout << "first violation:\n" << report.violations.front().describe() << "\n";
  return report.ok() ? kOk : kFailure;
}

int cmd_baby_test(std::size_t dim, std::size_t trials, std::uint64_t seed) {
  if (dim == 0) throw UsageError("--dim must be positive");
  std::size_t pass = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, t));
    const Subspace a = random_subspace(dim, rng), b = random_subspace(dim, rng), c = random_subspace(dim, rng);
    const bool item1 = is_zero(project_subspace(a, b)) == is_zero(project_subspace(b, a));
    const bool item2 = is_zero(project_subspace(project_subspace(a, b), c)) ==
                       is_zero(project_subspace(a, project_subspace(c, b)));
    if (item1 && item2) {
      ++pass;
    } else {
      std::cout << "trial " << t << " fails: A = " << to_string(a) << ", B = " << to_string(b)
                << ", C = " << to_string(c) << "\n";
    }
  }
  std::cout << pass << "/" << trials << " pass\n";
  return pass == trials ? kOk : kFailure;
}

int cmd_enumerate(std::size_t size, bool list) {
  QStructureEnumerator e(size);
  while (auto q = e.next()) {
    if (list) std::cout << model_to_json(*q).dump() << "\n";
  }
  std::cout << e.yielded() << " Q-structures of size " << size << " (" << e.candidates_examined()
            << " candidates examined)\n";
  return kOk;
}

int cmd_random_model(std::size_t size, std::uint64_t seed, bool projective) {
  RandomModelOptions opts;
  opts.projective = projective;
  const auto sampled = random_qstructure(size, seed, opts);
  std::cerr << "accepted after " << sampled.attempts << " attempts\n";
  std::cout << model_to_json(sampled.structure, "random-" + std::to_string(size) + "-" + std::to_string(seed)).dump(2)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-structures, phase semantics and the non-associative sequent calculus"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> action;

  std::string model, asg, text, mode = "plain", output, rule, models = "auto";
  std::size_t depth = 8, trials = 1000, size = 3, dim = 4;
  std::uint64_t seed = 0;
  bool allow_cut = false, list = false, projective = false;
  FalsifyOptions fopts;

  auto* validate_cmd = app.add_subcommand("validate", "check the Q-structure axioms of a model file");
  validate_cmd->add_option("model", model, "model file")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(model); }; });

  auto* facts_cmd = app.add_subcommand("facts", "list every fact of a model");
  facts_cmd->add_option("model", model, "model file")->required();
  facts_cmd->callback([&] { action = [&] { return cmd_facts(model); }; });

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula to a fact");
  eval_cmd->add_option("model", model, "model file")->required();
  eval_cmd->add_option("assignment", asg, "assignment file or inline JSON")->required();
  eval_cmd->add_option("formula", text, "formula")->required();
  eval_cmd->callback([&] { action = [&] { return cmd_eval(model, asg, text); }; });

  auto* check_cmd = app.add_subcommand("check", "decide a sequent in a model under an assignment");
  check_cmd->add_option("model", model, "model file")->required();
  check_cmd->add_option("assignment", asg, "assignment file or inline JSON")->required();
  check_cmd->add_option("sequent", text, "sequent")->required();
  check_cmd->callback([&] { action = [&] { return cmd_check(model, asg, text); }; });

  auto* prove_cmd = app.add_subcommand("prove", "search for a proof");
  prove_cmd->add_option("sequent", text, "sequent")->required();
  prove_cmd->add_option("--depth", depth, "maximum proof height")->capture_default_str();
  prove_cmd->add_option("--mode", mode, "plain or projective")->capture_default_str();
  prove_cmd->add_flag("--allow-cut", allow_cut, "allow subformula cuts");
  prove_cmd->add_option("-o,--output", output, "write the proof here instead of stdout");
  prove_cmd->callback([&] { action = [&] { return cmd_prove(text, depth, mode, allow_cut, output); }; });

  auto* check_proof_cmd = app.add_subcommand("check-proof", "check a proof file");
  check_proof_cmd->add_option("proof", model, "proof file")->required();
  check_proof_cmd->add_option("--mode", mode, "plain or projective")->capture_default_str();
  check_proof_cmd->callback([&] { action = [&] { return cmd_check_proof(model, mode); }; });

  auto* falsify_cmd = app.add_subcommand("falsify", "search for a countermodel");
  falsify_cmd->add_option("sequent", text, "sequent")->required();
  falsify_cmd->add_option("--max-size", fopts.max_size, "largest carrier")->capture_default_str();
  falsify_cmd->add_option("--seed", fopts.seed, "seed")->capture_default_str();
  falsify_cmd->add_option("--budget", fopts.budget, "probe budget")->capture_default_str();
  falsify_cmd->add_option("-o,--output", output, "write the countermodel here instead of stdout");
  falsify_cmd->callback([&] { action = [&] { return cmd_falsify(text, fopts, output); }; });

  auto* harness_cmd = app.add_subcommand("harness", "randomized soundness check of one rule");
  harness_cmd->add_option("--rule", rule, "rule name, e.g. TensorR")->required();
  harness_cmd->add_option("--trials", trials, "number of trials")->capture_default_str();
  harness_cmd->add_option("--seed", seed, "seed")->capture_default_str();
  harness_cmd->add_option("--mode", mode, "plain or projective")->capture_default_str();
  harness_cmd->add_option("--models", models, "auto, unconstrained or projective")->capture_default_str();
  harness_cmd->callback([&] { action = [&] { return cmd_harness(rule, trials, seed, mode, models); }; });

  auto* baby = app.add_subcommand("baby", "subspaces of Q^d");
  baby->require_subcommand(1);
  std::string vec, sub_a, sub_b;
  auto* project_cmd = baby->add_subcommand("project", "A . B: project subspace A onto B");
  project_cmd->add_option("A", sub_a, "subspace, e.g. \"1,1\" or \"1,0;0,1\"")->required();
  project_cmd->add_option("B", sub_b, "subspace")->required();
  project_cmd->callback([&] {
    action = [&] {
      const Subspace a = parse_subspace(sub_a);
      const Subspace b = parse_subspace(sub_b, a.ambient_dim());
      std::cout << to_string(project_subspace(a, b)) << "\n";
      return kOk;
    };
  });
  auto* complement_cmd = baby->add_subcommand("complement", "orthogonal complement");
  complement_cmd->add_option("A", sub_a, "subspace")->required();
  complement_cmd->add_option("--dim", dim, "ambient dimension (needed for the zero subspace)");
  complement_cmd->callback([&] {
    action = [&] {
      std::cout << to_string(ortho_complement(parse_subspace(sub_a, sub_a.empty() ? dim : 0))) << "\n";
      return kOk;
    };
  });
  auto* lemma_cmd = baby->add_subcommand("test-lemma1", "check both orthogonality equivalences on random triples");
  lemma_cmd->add_option("--dim", dim, "ambient dimension")->capture_default_str();
  lemma_cmd->add_option("--trials", trials, "number of triples")->capture_default_str();
  lemma_cmd->add_option("--seed", seed, "seed")->capture_default_str();
  lemma_cmd->callback([&] { action = [&] { return cmd_baby_test(dim, trials, seed); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "count (or list) all Q-structures of a size");
  enumerate_cmd->add_option("--size", size, "carrier size (1-4)")->required();
  enumerate_cmd->add_flag("--list", list, "print each structure as one JSON line");
  enumerate_cmd->callback([&] { action = [&] { return cmd_enumerate(size, list); }; });

  auto* random_cmd = app.add_subcommand("random-model", "sample a Q-structure");
  random_cmd->add_option("--size", size, "carrier size")->required();
  random_cmd->add_option("--seed", seed, "seed")->capture_default_str();
  random_cmd->add_flag("--projective", projective, "require Z to absorb on the left");
  random_cmd->callback([&] { action = [&] { return cmd_random_model(size, seed, projective); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    status = action();
  } catch (const qlogic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}
