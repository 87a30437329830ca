#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// Rewrite rules of the measurement calculus, oriented in execution order
/// (the left-hand window runs first).
///
///   EX          [X_i^s, E_ij]        -> [E_ij, Z_j^s, X_i^s]
///   EZ          [Z_i^s, E_ij]        -> [E_ij, Z_i^s]
///   MX          [X_i^r, M_i[s,t]]    -> [M_i[s+r, t]]
///   MZ          [Z_i^r, M_i[s,t]]    -> [M_i[s, t+r]]
///   FREE_E      [A, E_ij]            -> [E_ij, A]       A not E, disjoint
///   FREE_X/Z    [C_k, A]             -> [A, C_k]        A a measurement on
///                                                       another qubit, or a
///                                                       shift (C's signal is
///                                                       compensated)
///   SHIFT_SPLIT [M_i[s,t]]           -> [M_i[s], S_i^t]
///   SHIFT_X/Z   [S_i^t, C_j^s]       -> [C_j^{s[t+s_i/s_i]}, S_i^t]
///   SHIFT_M     [S_i^r, M_j[s,t]]    -> [M_j[s[r+s_i/s_i], t[r+s_i/s_i]], S_i^r]
///   SHIFT_DROP  [S_i^t] at the end   -> []
enum class Rule {
  EX,
  EZ,
  MX,
  MZ,
  FreeE,
  FreeX,
  FreeZ,
  ShiftSplit,
  ShiftX,
  ShiftZ,
  ShiftM,
  ShiftDrop,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

/// Core rules only, or core plus the signal-shifting rules.
enum class RuleSet { Core, Extended };

struct Redex {
  Rule rule;
  std::size_t position;
  friend bool operator==(const Redex&, const Redex&) = default;
};

struct RewriteStep {
  Rule rule;
  std::size_t position;
  std::vector<Command> before;
  std::vector<Command> after;
};

class NoMatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every (rule, position) whose left-hand side matches, in position order.
/// With RuleSet::Extended the free swap of a correction past a shift is left
/// out, since SHIFT_X/SHIFT_Z undo it.
std::vector<Redex> applicable_redexes(const Pattern& p, RuleSet rules = RuleSet::Core);

/// One rewrite step. Throws NoMatchError when `rule` does not match at
/// `position`.
Pattern apply_rule(const Pattern& p, Rule rule, std::size_t position);

/// Re-applies a trace step by step.
Pattern replay(const Pattern& p, const std::vector<RewriteStep>& trace);

struct Standardization {
  Pattern pattern;
  std::vector<RewriteStep> trace;
};

/// Rewrites to the unique core normal form, always applying the lowest
/// applicable position. Throws InvalidPatternError for non-runnable input.
Standardization standardize(const Pattern& p);

/// Core standardization followed by signal shifting: every shift is pushed
/// to the end and dropped, every Z-action signal of a measurement is split
/// off and pushed the same way.
Standardization standardize_extended(const Pattern& p);

/// No core rule applies.
bool is_standard(const Pattern& p);

/// Applies uniformly random core redexes until none remains.
Pattern random_order_standardize(const Pattern& p, std::uint64_t seed);

/// Lexicographic pair (sum of entanglement positions, sum over corrections of
/// length minus position), positions 1-based in execution order.
struct TerminationMeasure {
  std::uint64_t entangle_sum = 0;
  std::uint64_t correction_sum = 0;
  friend auto operator<=>(const TerminationMeasure&, const TerminationMeasure&) = default;
};

TerminationMeasure termination_measure(const Pattern& p);
TerminationMeasure termination_measure(const std::vector<Command>& sequence);

/// Hard ceiling on core steps for a source of `n` commands; exceeding it is
/// an internal error.
std::uint64_t step_ceiling(std::size_t n);

/// One line per step: `<rule> @ <position>: <before> => <after>`, windows in
/// right-to-left (paper) order.
std::string format_trace(const std::vector<RewriteStep>& trace);

}  // namespace mbqc
