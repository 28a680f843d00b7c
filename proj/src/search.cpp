#include "qlogic/search.hpp"

#include <unordered_map>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

class Searcher {
 public:
  Searcher(const SearchOptions& options, const Sequent& goal) : options_(options) {
    if (options_.allow_cut) {
      for (const auto& f : goal.succedents) {
        for (const auto& g : subformulas(f)) {
          add_cut_candidate(g);
          add_cut_candidate(nnf(Formula::negation(g)));
        }
      }
    }
  }

  std::optional<ProofTree> prove(const std::vector<Formula>& goal, std::size_t depth) {
    if (depth == 0) return std::nullopt;
    const std::string key = key_of(goal);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth) return std::nullopt;
    auto result = attempt(goal, depth);
    if (!result) {
      auto& d = failed_[key];
      d = std::max(d, depth);
    }
    return result;
  }

 private:
  static std::string key_of(const std::vector<Formula>& goal) {
    std::string key;
    for (const auto& f : goal) key += to_string(f) + ",";
    return key;
  }

  void add_cut_candidate(const Formula& f) {
    for (const auto& c : cut_candidates_) {
      if (c == f) return;
    }
    cut_candidates_.push_back(f);
  }

  static ProofTree node(std::vector<Formula> goal, RuleTag rule, std::vector<ProofTree> premises = {}) {
    return ProofTree{Sequent::right(std::move(goal)), rule, std::move(premises)};
  }

  std::optional<ProofTree> unary(const std::vector<Formula>& goal, RuleTag rule, std::vector<Formula> premise,
                                 std::size_t depth) {
    if (auto p = prove(premise, depth - 1)) return node(goal, rule, {std::move(*p)});
    return std::nullopt;
  }

  std::optional<ProofTree> binary(const std::vector<Formula>& goal, RuleTag rule, std::vector<Formula> first,
                                  std::vector<Formula> second, std::size_t depth) {
    auto p1 = prove(first, depth - 1);
    if (!p1) return std::nullopt;
    auto p2 = prove(second, depth - 1);
    if (!p2) return std::nullopt;
    return node(goal, rule, {std::move(*p1), std::move(*p2)});
  }

  std::optional<ProofTree> attempt(const std::vector<Formula>& goal, std::size_t depth) {
    const std::size_t n = goal.size();
    if (n == 2 && nnf(goal[0]) == nnf(Formula::negation(goal[1]))) return node(goal, RuleTag::AxId);
    if (n == 2 && goal[0].is(Connective::Top)) return node(goal, RuleTag::AxTop);
    if (n == 1 && goal[0].is(Connective::One)) return node(goal, RuleTag::AxOne);
    if (depth == 1 || n == 0) return std::nullopt;

    std::optional<ProofTree> found;
    if (n >= 1 && goal[0].is(Connective::Par)) {
      std::vector<Formula> premise{goal[0].left(), goal[0].right()};
      premise.insert(premise.end(), goal.begin() + 1, goal.end());
      if ((found = unary(goal, RuleTag::ParR, std::move(premise), depth))) return found;
    }
    if (n == 2 && goal[0].is(Connective::With)) {
      if ((found = binary(goal, RuleTag::WithR, {goal[0].left(), goal[1]}, {goal[0].right(), goal[1]}, depth))) {
        return found;
      }
    }
    if (n == 2 && goal[0].is(Connective::Plus)) {
      if ((found = unary(goal, RuleTag::Plus1, {goal[0].left(), goal[1]}, depth))) return found;
      if ((found = unary(goal, RuleTag::Plus2, {goal[0].right(), goal[1]}, depth))) return found;
    }
    if (n == 2 && goal[0] == Formula::negation(Formula::one())) {
      if ((found = unary(goal, RuleTag::BotR, {goal[1]}, depth))) return found;
    }
    if (n == 3 && goal[2].is(Connective::Tensor)) {
      if ((found = binary(goal, RuleTag::TensorR, {goal[2].left(), goal[0]}, {goal[2].right(), goal[1]}, depth))) {
        return found;
      }
    }
    if (n == 2 && (found = unary(goal, RuleTag::Ex1, {goal[1], goal[0]}, depth))) return found;
    if (n == 3 && (found = unary(goal, RuleTag::Ex2, {goal[2], goal[1], goal[0]}, depth))) return found;
    if (n == 2 && options_.mode == CalculusMode::Projective) {
      if ((found = unary(goal, RuleTag::WR, {goal[0]}, depth))) return found;
    }
    if (n == 2 && options_.allow_cut) {
      for (const auto& a : cut_candidates_) {
        if ((found = binary(goal, RuleTag::Cut, {a, goal[0]}, {nnf(Formula::negation(a)), goal[1]}, depth))) {
          return found;
        }
      }
    }
    return std::nullopt;
  }

  SearchOptions options_;
  std::vector<Formula> cut_candidates_;
  std::unordered_map<std::string, std::size_t> failed_;
};

}  // namespace

std::optional<ProofTree> search(const Sequent& goal, const SearchOptions& options) {
  if (!goal.right_sided()) throw UsageError("search needs a right-sided sequent; apply right_normalize first");
  Searcher searcher(options, goal);
  for (std::size_t depth = 1; depth <= options.max_depth; ++depth) {
    if (auto proof = searcher.prove(goal.succedents, depth)) return proof;
  }
  return std::nullopt;
}

Sequent proof_goal(const Sequent& s) {
  Sequent goal = right_normalize(s);
  for (auto& f : goal.succedents) f = nnf(f);
  return goal;
}

}  // namespace qlogic
