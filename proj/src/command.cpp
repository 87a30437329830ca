#include "mbqc/command.hpp"

#include <stdexcept>

namespace mbqc {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

Entangle::Entangle(const QubitId& i, const QubitId& j) {
  if (i == j) {
    throw std::invalid_argument("entanglement needs two distinct qubits, got " + i.label() +
                                " twice");
  }
  first_ = i < j ? i : j;
  second_ = i < j ? j : i;
}

Measure::Measure(const QubitId& qubit, const Angle& angle, const Signal& s, const Signal& t)
    : qubit_(qubit), angle_(angle), s_(s.without_constant()), t_(t.without_constant()) {
  if (s.constant() != 0) {
    angle_ = -angle_;
  }
  if (t.constant() != 0) {
    angle_ = angle_.plus_pi();
  }
  if (angle_.equals_exactly(0) || angle_.equals_exactly(1)) {
    s_ = Signal();
  }
}

std::vector<QubitId> quantum_qubits(const Command& c) {
  return std::visit(overloaded{
                        [](const Entangle& e) { return std::vector<QubitId>{e.first(), e.second()}; },
                        [](const Measure& m) { return std::vector<QubitId>{m.qubit()}; },
                        [](const Correct& x) { return std::vector<QubitId>{x.qubit}; },
                        [](const Shift&) { return std::vector<QubitId>{}; },
                    },
                    c);
}

std::vector<Signal> signals_of(const Command& c) {
  return std::visit(overloaded{
                        [](const Entangle&) { return std::vector<Signal>{}; },
                        [](const Measure& m) { return std::vector<Signal>{m.s(), m.t()}; },
                        [](const Correct& x) { return std::vector<Signal>{x.signal}; },
                        [](const Shift& s) { return std::vector<Signal>{s.signal}; },
                    },
                    c);
}

std::vector<QubitId> mentioned_qubits(const Command& c) {
  std::vector<QubitId> out = quantum_qubits(c);
  if (const auto* s = std::get_if<Shift>(&c)) {
    out.push_back(s->qubit);
  }
  for (const auto& sig : signals_of(c)) {
    out.insert(out.end(), sig.support().begin(), sig.support().end());
  }
  return out;
}

Command renamed(const Command& c, const QubitMap& f) {
  return std::visit(overloaded{
                        [&](const Entangle& e) -> Command {
                          return Entangle(f.at(e.first()), f.at(e.second()));
                        },
                        [&](const Measure& m) -> Command {
                          return Measure(f.at(m.qubit()), m.angle(), m.s().renamed(f),
                                         m.t().renamed(f));
                        },
                        [&](const Correct& x) -> Command {
                          return Correct{x.axis, f.at(x.qubit), x.signal.renamed(f)};
                        },
                        [&](const Shift& s) -> Command {
                          return Shift{f.at(s.qubit), s.signal.renamed(f)};
                        },
                    },
                    c);
}

std::string to_string(const Command& c) {
  return std::visit(
      overloaded{
          [](const Entangle& e) {
            return "E(" + e.first().label() + ", " + e.second().label() + ")";
          },
          [](const Measure& m) {
            std::string out = "M(" + m.qubit().label() + ", " + to_string(m.angle());
            if (m.s().has_support()) {
              out += ", s=" + to_string(m.s());
            }
            if (m.t().has_support()) {
              out += ", t=" + to_string(m.t());
            }
            return out + ")";
          },
          [](const Correct& x) {
            return std::string(x.axis == Axis::X ? "X(" : "Z(") + x.qubit.label() + ", " +
                   to_string(x.signal) + ")";
          },
          [](const Shift& s) { return "S(" + s.qubit.label() + ", " + to_string(s.signal) + ")"; },
      },
      c);
}

std::ostream& operator<<(std::ostream& out, const Command& c) { return out << to_string(c); }

}  // namespace mbqc
