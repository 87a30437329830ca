#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/qubit.hpp"
#include "mbqc/signal.hpp"

namespace mbqc {

/// Entanglement (controlled-Z) between two distinct qubits. Stored with
/// `first < second`, so `E(i,j)` and `E(j,i)` are the same command.
class Entangle {
 public:
  Entangle(const QubitId& i, const QubitId& j);
  const QubitId& first() const { return first_; }
  const QubitId& second() const { return second_; }
  bool touches(const QubitId& q) const { return q == first_ || q == second_; }
  /// The other end of the edge; `q` must be one of the two qubits.
  const QubitId& partner(const QubitId& q) const { return q == first_ ? second_ : first_; }
  friend bool operator==(const Entangle&, const Entangle&) = default;

 private:
  QubitId first_;
  QubitId second_;
};

/// Dependent xy-plane measurement `M_i^angle[s, t]`, performed at the angle
/// `(-1)^s * angle + t * pi`.
///
/// Construction normalizes: a constant 1 in `s` negates the angle, a constant
/// 1 in `t` adds pi, and at exact angles 0 and pi the `s` signal is dropped
/// since the X-action is trivial there. Stored signals never carry constants.
class Measure {
 public:
  Measure(const QubitId& qubit, const Angle& angle, const Signal& s = {}, const Signal& t = {});
  const QubitId& qubit() const { return qubit_; }
  const Angle& angle() const { return angle_; }
  const Signal& s() const { return s_; }
  const Signal& t() const { return t_; }
  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  QubitId qubit_;
  Angle angle_;
  Signal s_;
  Signal t_;
};

enum class Axis { X, Z };

/// Dependent Pauli correction `X_i^s` or `Z_i^s`.
struct Correct {
  Axis axis;
  QubitId qubit;
  Signal signal;
  friend bool operator==(const Correct&, const Correct&) = default;
};

/// Signal shift `S_i^s`: adds the value of `s` to the recorded outcome of `i`.
struct Shift {
  QubitId qubit;
  Signal signal;
  friend bool operator==(const Shift&, const Shift&) = default;
};

using Command = std::variant<Entangle, Measure, Correct, Shift>;

inline Command correct_x(const QubitId& q, const Signal& s = Signal(1)) {
  return Correct{Axis::X, q, s};
}
inline Command correct_z(const QubitId& q, const Signal& s = Signal(1)) {
  return Correct{Axis::Z, q, s};
}

inline bool is_entangle(const Command& c) { return std::holds_alternative<Entangle>(c); }
inline bool is_measure(const Command& c) { return std::holds_alternative<Measure>(c); }
inline bool is_correct(const Command& c) { return std::holds_alternative<Correct>(c); }
inline bool is_shift(const Command& c) { return std::holds_alternative<Shift>(c); }

/// Qubits the command acts on quantumly (shifts act on none).
std::vector<QubitId> quantum_qubits(const Command& c);
/// Every qubit label the command mentions, including signal supports and the
/// target of a shift.
std::vector<QubitId> mentioned_qubits(const Command& c);
/// Signals read by the command.
std::vector<Signal> signals_of(const Command& c);

Command renamed(const Command& c, const QubitMap& f);

/// DSL form, e.g. `E(1, 2)`, `M(2, 7/4 pi, s=s[1])`, `X(3, s[2])`.
std::string to_string(const Command& c);
std::ostream& operator<<(std::ostream& out, const Command& c);

}  // namespace mbqc
