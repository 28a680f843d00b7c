#pragma once

// Right-sided sequent calculus for Q-structures:
//
//   AxId    |- ~A, A                  (~A matched up to negation normal form)
//   Cut     |- A, B   |- ~A, C   =>  |- B, C
//   Ex1     |- A1, A2                 =>  |- A2, A1
//   Ex2     |- A1, A2, A3             =>  |- A3, A2, A1
//   AxTop   |- T, A
//   WithR   |- A, C   |- B, C    =>  |- A & B, C
//   Plus1   |- A, C                   =>  |- A + B, C
//   Plus2   |- A, C                   =>  |- B + A, C
//   AxOne   |- 1
//   BotR    |- A                      =>  |- ~1, A
//   TensorR |- A, C   |- B, D    =>  |- C, D, A * B
//   ParR    |- A, B, s...             =>  |- A | B, s...
//   WR      |- A                      =>  |- A, B     (projective mode only)
//
// Contexts are single formulas except in ParR. There is no inverse of ParR.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/sequent.hpp"

namespace qlogic {

enum class RuleTag { AxId, AxTop, AxOne, Cut, Ex1, Ex2, WithR, Plus1, Plus2, BotR, TensorR, ParR, WR };

inline constexpr RuleTag kAllRules[] = {RuleTag::AxId,  RuleTag::AxTop, RuleTag::AxOne,   RuleTag::Cut, RuleTag::Ex1,
                                        RuleTag::Ex2,   RuleTag::WithR, RuleTag::Plus1,   RuleTag::Plus2,
                                        RuleTag::BotR,  RuleTag::TensorR, RuleTag::ParR, RuleTag::WR};

std::string_view rule_name(RuleTag r);
std::optional<RuleTag> parse_rule(std::string_view name);
std::size_t rule_arity(RuleTag r);

enum class CalculusMode { Plain, Projective };

std::string_view mode_name(CalculusMode m);
std::optional<CalculusMode> parse_mode(std::string_view name);

struct ProofTree {
  Sequent conclusion;
  RuleTag rule;
  std::vector<ProofTree> premises;

  std::size_t height() const;
  std::size_t node_count() const;
};

enum class ProofErrorKind { NotRightSided, Arity, Shape, Mode };

std::string_view error_kind_name(ProofErrorKind k);

struct ProofError {
  ProofErrorKind kind;
  RuleTag rule;
  /// Premise indices from the root to the offending node.
  std::vector<std::size_t> path;
  std::string message;

  std::string describe() const;
};

/// Checks one inference against the literal schema of `rule`.
std::optional<ProofError> check_step(RuleTag rule, const std::vector<Sequent>& premises, const Sequent& conclusion,
                                     CalculusMode mode);

/// Checks every node; the first failing node in pre-order is reported with its path.
std::optional<ProofError> check_proof(const ProofTree& tree, CalculusMode mode);


}  // namespace qlogic
