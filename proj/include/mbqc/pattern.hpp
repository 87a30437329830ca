#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/command.hpp"

namespace mbqc {

/// Structural problem with a pattern (unknown qubit, bad interface, ...).
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A measurement pattern: computation space, ordered inputs and outputs, and a
/// command sequence in execution order (element 0 runs first).
///
/// The input and output orderings fix the tensor positions used when the
/// pattern is simulated: input `k` is bit `k` of the input basis index.
/// Qubits in `space \ inputs` start in |+>.
class Pattern {
 public:
  Pattern() = default;
  /// Throws PatternError unless inputs and outputs are duplicate-free subsets of
  /// `space` and every command mentions only qubits of `space`.
  Pattern(std::vector<QubitId> space, std::vector<QubitId> inputs, std::vector<QubitId> outputs,
          std::vector<Command> sequence = {});

  /// Sorted, duplicate-free.
  const std::vector<QubitId>& space() const { return space_; }
  const std::vector<QubitId>& inputs() const { return inputs_; }
  const std::vector<QubitId>& outputs() const { return outputs_; }
  const std::vector<Command>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

  bool contains(const QubitId& q) const;
  bool is_output(const QubitId& q) const;

  /// Same space and interface, different commands.
  Pattern with_sequence(std::vector<Command> sequence) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<QubitId> space_;
  std::vector<QubitId> inputs_;
  std::vector<QubitId> outputs_;
  std::vector<Command> sequence_;
};

struct ConditionResult {
  bool passed = true;
  /// Execution-order index of the first offending command, when one exists.
  std::optional<std::size_t> index;
  std::string detail;
};

/// Definiteness conditions D0 (no command reads an unknown outcome), D1 (no
/// command touches a measured qubit), D2 (exactly the non-outputs are
/// measured), plus the EMC shape check.
struct ValidityReport {
  ConditionResult d0;
  ConditionResult d1;
  ConditionResult d2;
  bool emc = true;

  bool runnable() const { return d0.passed && d1.passed && d2.passed; }
  std::string summary() const;
};

ValidityReport validate(const Pattern& p);

/// Raised by operations that need a pattern satisfying D0, D1 and D2.
class InvalidPatternError : public std::invalid_argument {
 public:
  explicit InvalidPatternError(const ValidityReport& report)
      : std::invalid_argument("pattern is not runnable: " + report.summary()), report(report) {}
  ValidityReport report;
};

void require_valid(const Pattern& p);

/// Entanglements first, then measurements (and shifts), then corrections.
bool is_emc(const Pattern& p);

/// Sequential composition: runs `first`, then `second`.
///
/// Requires `space(first) & space(second) == outputs(first) == inputs(second)`
/// as sets. The result has the inputs of `first` and the outputs of `second`.
Pattern compose(const Pattern& second, const Pattern& first);

/// Parallel composition over disjoint spaces. Inputs and outputs are
/// concatenated (`a` first), so the result realises `U_b (x) U_a` with `a` on
/// the low-order bits.
Pattern tensor(const Pattern& a, const Pattern& b);

/// Relabels every qubit through `f`, which must be injective on the space.
Pattern rename(const Pattern& p, const QubitMap& f);

/// Convenience for integer-labelled builders: maps qubit `k` (1-based) to
/// `targets[k-1]`.
Pattern rename(const Pattern& p, const std::vector<QubitId>& targets);
Pattern rename(const Pattern& p, std::initializer_list<QubitId> targets);

}  // namespace mbqc
