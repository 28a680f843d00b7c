#include "qlogic/proof.hpp"

#include <algorithm>
#include <sstream>

namespace qlogic {

namespace {

struct RuleInfo {
  RuleTag tag;
  std::string_view name;
  std::size_t arity;
};

constexpr RuleInfo kRules[] = {
    {RuleTag::AxId, "AxId", 0},   {RuleTag::AxTop, "AxTop", 0},     {RuleTag::AxOne, "AxOne", 0},
    {RuleTag::Cut, "Cut", 2},     {RuleTag::Ex1, "Ex1", 1},         {RuleTag::Ex2, "Ex2", 1},
    {RuleTag::WithR, "WithR", 2}, {RuleTag::Plus1, "Plus1", 1},     {RuleTag::Plus2, "Plus2", 1},
    {RuleTag::BotR, "BotR", 1},   {RuleTag::TensorR, "TensorR", 2}, {RuleTag::ParR, "ParR", 1},
    {RuleTag::WR, "WR", 1},
};

const RuleInfo& info(RuleTag r) {
  return *std::find_if(std::begin(kRules), std::end(kRules), [r](const RuleInfo& i) { return i.tag == r; });
}

bool same_up_to_nnf(const Formula& a, const Formula& b) { return nnf(a) == nnf(b); }

/// Builds the error for a schema mismatch.
class StepChecker {
 public:
  StepChecker(RuleTag rule, const std::vector<Sequent>& premises, const Sequent& conclusion)
      : rule_(rule), premises_(premises), conclusion_(conclusion) {}

  std::optional<ProofError> run(CalculusMode mode) {
    if (rule_ == RuleTag::WR && mode != CalculusMode::Projective) {
      return error(ProofErrorKind::Mode, "WR is only available in projective mode");
    }
    if (premises_.size() != rule_arity(rule_)) {
      return error(ProofErrorKind::Arity, "expects " + std::to_string(rule_arity(rule_)) + " premise(s), got " +
                                              std::to_string(premises_.size()));
    }
    if (!conclusion_.right_sided()) return error(ProofErrorKind::NotRightSided, "conclusion has antecedents");
    for (std::size_t i = 0; i < premises_.size(); ++i) {
      if (!premises_[i].right_sided()) {
        return error(ProofErrorKind::NotRightSided, "premise " + std::to_string(i + 1) + " has antecedents");
      }
    }
    return shape();
  }

 private:
  const std::vector<Formula>& c() const { return conclusion_.succedents; }
  const std::vector<Formula>& p(std::size_t i) const { return premises_[i].succedents; }

  ProofError error(ProofErrorKind kind, std::string message) const {
    return ProofError{kind, rule_, {}, std::string(rule_name(rule_)) + ": " + message};
  }

  std::optional<ProofError> length(const std::vector<Formula>& seq, std::size_t n, const std::string& which) const {
    if (seq.size() == n) return std::nullopt;
    return error(ProofErrorKind::Shape, which + " must have exactly " + std::to_string(n) + " formula(s), has " +
                                            std::to_string(seq.size()));
  }

  std::optional<ProofError> same(const Formula& expected, const Formula& got, const std::string& where) const {
    if (expected == got) return std::nullopt;
    return error(ProofErrorKind::Shape, where + " should be " + to_string(expected) + ", found " + to_string(got));
  }

  std::optional<ProofError> kind(const Formula& f, Connective k, const std::string& where,
                                 std::string_view expected) const {
    if (f.is(k)) return std::nullopt;
    return error(ProofErrorKind::Shape, where + " must be " + std::string(expected) + ", found " + to_string(f));
  }

  std::optional<ProofError> shape() const {
    std::optional<ProofError> e;
    switch (rule_) {
      case RuleTag::AxId:
        if ((e = length(c(), 2, "conclusion"))) return e;
        if (!same_up_to_nnf(c()[0], Formula::negation(c()[1]))) {
          return error(ProofErrorKind::Shape, "conclusion formula 1 (" + to_string(c()[0]) +
                                                  ") is not the negation of formula 2 (" + to_string(c()[1]) + ")");
        }
        return std::nullopt;
      case RuleTag::AxTop:
        if ((e = length(c(), 2, "conclusion"))) return e;
        return kind(c()[0], Connective::Top, "conclusion formula 1", "T");
      case RuleTag::AxOne:
        if ((e = length(c(), 1, "conclusion"))) return e;
        return kind(c()[0], Connective::One, "conclusion formula 1", "1");
      case RuleTag::Cut:
        if ((e = length(p(0), 2, "premise 1")) || (e = length(p(1), 2, "premise 2")) ||
            (e = length(c(), 2, "conclusion"))) {
          return e;
        }
        if (!same_up_to_nnf(p(1)[0], Formula::negation(p(0)[0]))) {
          return error(ProofErrorKind::Shape, "premise 2 formula 1 (" + to_string(p(1)[0]) +
                                                  ") is not the negation of the cut formula " + to_string(p(0)[0]));
        }
        if ((e = same(p(0)[1], c()[0], "conclusion formula 1"))) return e;
        return same(p(1)[1], c()[1], "conclusion formula 2");
      case RuleTag::Ex1:
        if ((e = length(p(0), 2, "premise 1")) || (e = length(c(), 2, "conclusion"))) return e;
        if ((e = same(p(0)[1], c()[0], "conclusion formula 1"))) return e;
        return same(p(0)[0], c()[1], "conclusion formula 2");
      case RuleTag::Ex2:
        if ((e = length(p(0), 3, "premise 1")) || (e = length(c(), 3, "conclusion"))) return e;
        for (std::size_t i = 0; i < 3; ++i) {
          if ((e = same(p(0)[2 - i], c()[i], "conclusion formula " + std::to_string(i + 1)))) return e;
        }
        return std::nullopt;
      case RuleTag::WithR:
        if ((e = length(p(0), 2, "premise 1")) || (e = length(p(1), 2, "premise 2")) ||
            (e = length(c(), 2, "conclusion"))) {
          return e;
        }
        if ((e = kind(c()[0], Connective::With, "conclusion formula 1", "a & formula"))) return e;
        if ((e = same(c()[0].left(), p(0)[0], "premise 1 formula 1"))) return e;
        if ((e = same(c()[0].right(), p(1)[0], "premise 2 formula 1"))) return e;
        if ((e = same(c()[1], p(0)[1], "premise 1 formula 2"))) return e;
        return same(c()[1], p(1)[1], "premise 2 formula 2");
      case RuleTag::Plus1:
      case RuleTag::Plus2: {
        if ((e = length(p(0), 2, "premise 1")) || (e = length(c(), 2, "conclusion"))) return e;
        if ((e = kind(c()[0], Connective::Plus, "conclusion formula 1", "a + formula"))) return e;
        const Formula& kept = rule_ == RuleTag::Plus1 ? c()[0].left() : c()[0].right();
        if ((e = same(kept, p(0)[0], "premise 1 formula 1"))) return e;
        return same(p(0)[1], c()[1], "conclusion formula 2");
      }
      case RuleTag::BotR:
        if ((e = length(p(0), 1, "premise 1")) || (e = length(c(), 2, "conclusion"))) return e;
        if (!(c()[0] == Formula::negation(Formula::one()))) {
          return error(ProofErrorKind::Shape, "conclusion formula 1 must be ~1, found " + to_string(c()[0]));
        }
        return same(p(0)[0], c()[1], "conclusion formula 2");
      case RuleTag::TensorR:
        if ((e = length(p(0), 2, "premise 1")) || (e = length(p(1), 2, "premise 2")) ||
            (e = length(c(), 3, "conclusion"))) {
          return e;
        }
        if ((e = kind(c()[2], Connective::Tensor, "conclusion formula 3", "a * formula"))) return e;
        if ((e = same(p(0)[1], c()[0], "conclusion formula 1"))) return e;
        if ((e = same(p(1)[1], c()[1], "conclusion formula 2"))) return e;
        if ((e = same(c()[2].left(), p(0)[0], "premise 1 formula 1"))) return e;
        return same(c()[2].right(), p(1)[0], "premise 2 formula 1");
      case RuleTag::ParR: {
        if (p(0).size() < 2) return length(p(0), 2, "premise 1");
        if ((e = length(c(), p(0).size() - 1, "conclusion"))) return e;
        if ((e = same(Formula::par(p(0)[0], p(0)[1]), c()[0], "conclusion formula 1"))) return e;
        for (std::size_t i = 1; i < c().size(); ++i) {
          if ((e = same(p(0)[i + 1], c()[i], "conclusion formula " + std::to_string(i + 1)))) return e;
        }
        return std::nullopt;
      }
      case RuleTag::WR:
        if ((e = length(p(0), 1, "premise 1")) || (e = length(c(), 2, "conclusion"))) return e;
        return same(p(0)[0], c()[0], "conclusion formula 1");
    }
    return error(ProofErrorKind::Shape, "unknown rule");
  }

  RuleTag rule_;
  const std::vector<Sequent>& premises_;
  const Sequent& conclusion_;
};

std::optional<ProofError> check_at(const ProofTree& tree, CalculusMode mode, std::vector<std::size_t>& path) {
  std::vector<Sequent> premises;
  premises.reserve(tree.premises.size());
  for (const auto& p : tree.premises) premises.push_back(p.conclusion);
  if (auto e = check_step(tree.rule, premises, tree.conclusion, mode)) {
    e->path = path;
    return e;
  }
  for (std::size_t i = 0; i < tree.premises.size(); ++i) {
    path.push_back(i);
    if (auto e = check_at(tree.premises[i], mode, path)) return e;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::string_view rule_name(RuleTag r) { return info(r).name; }

std::optional<RuleTag> parse_rule(std::string_view name) {
  for (const auto& i : kRules) {
    if (i.name == name) return i.tag;
  }
  return std::nullopt;
}

std::size_t rule_arity(RuleTag r) { return info(r).arity; }

std::string_view mode_name(CalculusMode m) { return m == CalculusMode::Plain ? "plain" : "projective"; }

std::optional<CalculusMode> parse_mode(std::string_view name) {
  if (name == "plain") return CalculusMode::Plain;
  if (name == "projective") return CalculusMode::Projective;
  return std::nullopt;
}

std::size_t ProofTree::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::size_t ProofTree::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

std::string_view error_kind_name(ProofErrorKind k) {
  switch (k) {
    case ProofErrorKind::NotRightSided:
      return "not-right-sided";
    case ProofErrorKind::Arity:
      return "arity";
    case ProofErrorKind::Shape:
      return "shape";
    case ProofErrorKind::Mode:
      return "mode";
  }
  return "unknown";
}

std::string ProofError::describe() const {
  std::ostringstream os;
  os << error_kind_name(kind) << " error at node [";
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
  os << "]: " << message;
  return os.str();
}

std::optional<ProofError> check_step(RuleTag rule, const std::vector<Sequent>& premises, const Sequent& conclusion,
                                     CalculusMode mode) {
  return StepChecker(rule, premises, conclusion).run(mode);
}

std::optional<ProofError> check_proof(const ProofTree& tree, CalculusMode mode) {
  std::vector<std::size_t> path;
  return check_at(tree, mode, path);
}

}  // namespace qlogic
