#include "qlogic/formula.hpp"

#include <optional>

#include "qlogic/errors.hpp"

namespace qlogic {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw UsageError("bad atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), {}}));
}

Formula Formula::one() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::One, {}, {}}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::Top, {}, {}}));
  return f;
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Connective::Neg, {}, {std::move(f)}}));
}

Formula Formula::binary(Connective c, Formula l, Formula r) {
  if (c != Connective::Tensor && c != Connective::Par && c != Connective::With && c != Connective::Plus) {
    throw UsageError("not a binary connective");
  }
  return Formula(std::make_shared<const Node>(Node{c, {}, {std::move(l), std::move(r)}}));
}

Formula Formula::tensor(Formula l, Formula r) { return binary(Connective::Tensor, std::move(l), std::move(r)); }
Formula Formula::par(Formula l, Formula r) { return binary(Connective::Par, std::move(l), std::move(r)); }
Formula Formula::with(Formula l, Formula r) { return binary(Connective::With, std::move(l), std::move(r)); }
Formula Formula::plus(Formula l, Formula r) { return binary(Connective::Plus, std::move(l), std::move(r)); }
Formula Formula::limp(Formula l, Formula r) { return par(negation(std::move(l)), std::move(r)); }

bool Formula::is_binary() const {
  switch (kind()) {
    case Connective::Tensor:
    case Connective::Par:
    case Connective::With:
    case Connective::Plus:
      return true;
    default:
      return false;
  }
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->children == b.node_->children;
}

namespace {

enum class Tok { Atom, One, Top, Neg, LParen, RParen, Op, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Connective op = Connective::Atom;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= '0' && s[j] <= '9') || s[j] == '_')) ++j;
      out.push_back({Tok::Atom, i, std::string(s.substr(i, j - i))});
      i = j;
    } else if (c == '1') {
      out.push_back({Tok::One, i, "1"});
      ++i;
    } else if (c == 'T') {
      out.push_back({Tok::Top, i, "T"});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Neg, i, "~"});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, i, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, i, ")"});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::Op, i, "*", Connective::Tensor});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Op, i, "|", Connective::Par});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::Op, i, "&", Connective::With});
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Op, i, "+", Connective::Plus});
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == 'o') {
      // Connective::Neg marks linear implication inside the parser only.
      out.push_back({Tok::Op, i, "-o", Connective::Neg});
      i += 2;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula formula() {
    Formula acc = unary();
    std::optional<Token> chain_op;
    while (peek().kind == Tok::Op) {
      Token op = take();
      if (chain_op && chain_op->op != op.op) {
        throw ParseError("connective '" + op.text + "' mixed with '" + chain_op->text +
                             "' without parentheses",
                         op.pos);
      }
      chain_op = op;
      Formula rhs = unary();
      acc = op.op == Connective::Neg ? Formula::limp(acc, rhs) : Formula::binary(op.op, acc, rhs);
    }
    return acc;
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  Token take() { return tokens_[pos_++]; }

  Formula unary() {
    if (peek().kind == Tok::Neg) {
      take();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Atom:
        return Formula::atom(t.text);
      case Tok::One:
        return Formula::one();
      case Tok::Top:
        return Formula::top();
      case Tok::LParen: {
        Formula inner = formula();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        take();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view op_text(Connective c) {
  switch (c) {
    case Connective::Tensor:
      return " * ";
    case Connective::Par:
      return " | ";
    case Connective::With:
      return " & ";
    case Connective::Plus:
      return " + ";
    default:
      return " ? ";
  }
}

Formula fold(Connective c, std::span<const Formula> fs, const char* what) {
  if (fs.empty()) throw UsageError(std::string(what) + " of an empty sequence");
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::binary(c, acc, fs[i]);
  return acc;
}

Connective dual(Connective c) {
  switch (c) {
    case Connective::Tensor:
      return Connective::Par;
    case Connective::Par:
      return Connective::Tensor;
    case Connective::With:
      return Connective::Plus;
    case Connective::Plus:
      return Connective::With;
    default:
      return c;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(tokenize(text));
  Formula f = p.formula();
  if (p.peek().kind != Tok::End) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
  return f;
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return f.name();
    case Connective::One:
      return "1";
    case Connective::Top:
      return "T";
    case Connective::Neg:
      return "~" + to_string(f.operand());
    default:
      return "(" + to_string(f.left()) + std::string(op_text(f.kind())) + to_string(f.right()) + ")";
  }
}

Formula nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::One:
    case Connective::Top:
      return f;
    case Connective::Neg: {
      const Formula& g = f.operand();
      switch (g.kind()) {
        case Connective::Atom:
        case Connective::One:
        case Connective::Top:
          return f;
        case Connective::Neg:
          return nnf(g.operand());
        default:
          return Formula::binary(dual(g.kind()), nnf(Formula::negation(g.left())),
                                 nnf(Formula::negation(g.right())));
      }
    }
    default:
      return Formula::binary(f.kind(), nnf(f.left()), nnf(f.right()));
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.insert(f.name());
      return;
    case Connective::One:
    case Connective::Top:
      return;
    case Connective::Neg:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    bool seen = false;
    for (const auto& h : out) seen = seen || h == g;
    if (seen) continue;
    out.push_back(g);
    if (g.is(Connective::Neg)) {
      stack.push_back(g.operand());
    } else if (g.is_binary()) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    }
  }
  return out;
}

Formula fold_pars(std::span<const Formula> fs) { return fold(Connective::Par, fs, "fold_pars"); }
Formula fold_tensors(std::span<const Formula> fs) { return fold(Connective::Tensor, fs, "fold_tensors"); }

}  // namespace qlogic
