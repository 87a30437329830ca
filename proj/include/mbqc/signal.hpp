#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/qubit.hpp"

namespace mbqc {

/// Measurement outcomes recorded so far, keyed by measured qubit.
using OutcomeMap = std::map<QubitId, int>;

/// Raised when a signal reads an outcome that has not been recorded.
class MissingOutcomeError : public std::runtime_error {
 public:
  explicit MissingOutcomeError(const QubitId& q)
      : std::runtime_error("outcome of qubit " + q.label() + " is not available"), qubit(q) {}
  QubitId qubit;
};

/// An affine Z2 sum `c + s_i + s_j + ...` of measurement outcomes.
class Signal {
 public:
  Signal() = default;
  /// Constant signal (0 or 1).
  explicit Signal(int constant) : constant_(constant & 1) {}
  Signal(int constant, std::vector<QubitId> support);

  /// The single outcome `s_q`.
  static Signal outcome(const QubitId& q) { return Signal(0, {q}); }

  int constant() const { return constant_; }
  /// Sorted, duplicate-free.
  const std::vector<QubitId>& support() const { return support_; }
  bool contains(const QubitId& q) const;
  /// True for the zero signal.
  bool empty() const { return constant_ == 0 && support_.empty(); }
  bool has_support() const { return !support_.empty(); }

  Signal without_constant() const { return Signal(0, support_); }

  /// Value under `outcomes`; throws MissingOutcomeError for unknown qubits.
  int evaluate(const OutcomeMap& outcomes) const;

  /// `s[t + s_q / s_q]`: adds `t` when `q` is in the support.
  Signal substitute(const QubitId& q, const Signal& t) const;

  Signal renamed(const QubitMap& f) const;

  Signal& operator+=(const Signal& other);
  friend Signal operator+(Signal a, const Signal& b) { return a += b; }
  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  int constant_ = 0;
  std::vector<QubitId> support_;
};

/// `0`, `1`, `s[1]`, `1 + s[2] + s[4]`.
std::string to_string(const Signal& s);
std::ostream& operator<<(std::ostream& out, const Signal& s);

}  // namespace mbqc
