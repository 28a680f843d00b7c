#pragma once

// Formulas of the multiplicative-additive language: atoms, the constants
// 1 and T, negation, and the binary connectives * (tensor), | (par),
// & (with), + (plus). Linear implication "a -o b" is sugar and is stored as
// (~a | b). The constants bottom and zero are written ~1 and ~T.
//
// Surface grammar (ASCII):
//   formula := unary (op unary)*     -- all ops in one chain must be equal;
//                                        chains associate to the left
//   unary   := '~' unary | primary
//   primary := atom | '1' | 'T' | '(' formula ')'
//   atom    := [a-z][a-z0-9_]*
//   op      := '*' | '|' | '&' | '+' | '-o'

#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

enum class Connective { Atom, Neg, One, Top, Tensor, Par, With, Plus };

/// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula one();
  static Formula top();
  static Formula negation(Formula f);
  static Formula tensor(Formula l, Formula r);
  static Formula par(Formula l, Formula r);
  static Formula with(Formula l, Formula r);
  static Formula plus(Formula l, Formula r);
  /// l -o r, stored as (~l | r).
  static Formula limp(Formula l, Formula r);
  static Formula binary(Connective c, Formula l, Formula r);

  Connective kind() const { return node_->kind; }
  bool is(Connective c) const { return node_->kind == c; }
  bool is_binary() const;
  const std::string& name() const { return node_->name; }
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool is_valid_atom_name(std::string_view name);

/// Throws ParseError with the offending position.
Formula parse_formula(std::string_view text);
/// Fully parenthesized canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Negation normal form: negations pushed onto atoms and constants using
/// ~~F = F and the De Morgan dualities, keeping argument order.
Formula nnf(const Formula& f);

void collect_atoms(const Formula& f, std::set<std::string>& out);
/// All subformulas, outermost first, without duplicates.
std::vector<Formula> subformulas(const Formula& f);

/// ((f1 | f2) | ...) | fn; a singleton returns its element. Throws UsageError on empty input.
Formula fold_pars(std::span<const Formula> fs);
/// ((f1 * f2) * ...) * fn; a singleton returns its element. Throws UsageError on empty input.
Formula fold_tensors(std::span<const Formula> fs);

}  // namespace qlogic
