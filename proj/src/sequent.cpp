#include "qlogic/sequent.hpp"

#include "qlogic/errors.hpp"

namespace qlogic {

Fact eval(const QStructure& q, const Assignment& asg, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = asg.find(f.name());
      if (it == asg.end()) throw EvaluationError("atom '" + f.name() + "' is not assigned a fact");
      if (!(it->second.structure() == q)) {
        throw UsageError("atom '" + f.name() + "' is assigned a fact of another Q-structure");
      }
      return it->second;
    }
    case Connective::One:
      return one_fact(q);
    case Connective::Top:
      return top_fact(q);
    case Connective::Neg:
      return neg(eval(q, asg, f.operand()));
    case Connective::Tensor:
      return tensor(eval(q, asg, f.left()), eval(q, asg, f.right()));
    case Connective::Par:
      return par(eval(q, asg, f.left()), eval(q, asg, f.right()));
    case Connective::With:
      return with_(eval(q, asg, f.left()), eval(q, asg, f.right()));
    case Connective::Plus:
      return plus(eval(q, asg, f.left()), eval(q, asg, f.right()));
  }
  throw UsageError("unknown connective");
}

namespace {

std::vector<Formula> parse_side(std::string_view text, std::size_t offset) {
  std::vector<Formula> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  int depth = 0;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    const auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw ParseError("empty formula in sequent", offset + start);
    }
    try {
      out.push_back(parse_formula(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad formula '" + std::string(piece) + "'", offset + start + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      emit(i);
      start = i + 1;
    }
  }
  emit(text.size());
  return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
  const auto turnstile = text.find("|-");
  if (turnstile == std::string_view::npos) throw ParseError("missing '|-'", text.size());
  if (text.find("|-", turnstile + 2) != std::string_view::npos) {
    throw ParseError("more than one '|-'", text.find("|-", turnstile + 2));
  }
  Sequent s{parse_side(text.substr(0, turnstile), 0), parse_side(text.substr(turnstile + 2), turnstile + 2)};
  if (s.antecedents.empty() && s.succedents.empty()) throw ParseError("sequent has two empty sides", turnstile);
  return s;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedents.size(); ++i) out += (i ? ", " : "") + to_string(s.antecedents[i]);
  out += out.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.succedents.size(); ++i) out += (i ? ", " : " ") + to_string(s.succedents[i]);
  return out;
}

bool sequent_valid(const QStructure& q, const Assignment& asg, const Sequent& s) {
  if (s.antecedents.empty() && s.succedents.empty()) throw UsageError("sequent_valid: both sides are empty");
  const Fact right = s.succedents.empty() ? z_fact(q) : eval(q, asg, fold_pars(s.succedents));
  if (s.antecedents.empty()) return right.contains(q.unit());
  return is_valid_fact(limp(eval(q, asg, fold_tensors(s.antecedents)), right));
}

Sequent right_normalize(const Sequent& s) {
  if (s.antecedents.empty()) return s;
  Sequent out;
  out.succedents = s.succedents.empty() ? std::vector<Formula>{Formula::negation(Formula::one())} : s.succedents;
  for (auto it = s.antecedents.rbegin(); it != s.antecedents.rend(); ++it) {
    out.succedents.push_back(nnf(Formula::negation(*it)));
  }
  return out;
}

std::set<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> atoms;
  for (const auto& f : s.antecedents) collect_atoms(f, atoms);
  for (const auto& f : s.succedents) collect_atoms(f, atoms);
  return atoms;
}

}  // namespace qlogic
