#include "mbqc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace mbqc {

namespace {

using Index = Eigen::Index;

// Batched register: one column per input being pushed through the same
// branch. Row index bit `m` is the state of `qubits[m]`.
struct Register {
  std::vector<QubitId> qubits;
  Matrix amps;

  Index bit(const QubitId& q) const {
    auto it = std::find(qubits.begin(), qubits.end(), q);
    if (it == qubits.end()) {
      throw SimulationError("qubit " + q.label() + " is not live");
    }
    return static_cast<Index>(1) << (it - qubits.begin());
  }

  void cz(const QubitId& a, const QubitId& b) {
    const Index mask = bit(a) | bit(b);
    for (Index r = 0; r < amps.rows(); ++r) {
      if ((r & mask) == mask) {
        amps.row(r) *= -1.0;
      }
    }
  }

  void pauli_x(const QubitId& q) {
    const Index m = bit(q);
    for (Index r = 0; r < amps.rows(); ++r) {
      if (!(r & m)) {
        amps.row(r).swap(amps.row(r | m));
      }
    }
  }

  void pauli_z(const QubitId& q) {
    const Index m = bit(q);
    for (Index r = 0; r < amps.rows(); ++r) {
      if (r & m) {
        amps.row(r) *= -1.0;
      }
    }
  }

  // <+theta| (outcome 0) or <-theta| (outcome 1) on `q`, which is removed.
  Register project(const QubitId& q, double theta, int outcome) const {
    const Index m = bit(q);
    const Index low = m - 1;
    const Complex phase = std::polar(outcome ? -1.0 : 1.0, -theta);
    Register out;
    out.qubits = qubits;
    out.qubits.erase(out.qubits.begin() + std::countr_zero(static_cast<std::uint64_t>(m)));
    out.amps.resize(amps.rows() / 2, amps.cols());
    for (Index r = 0; r < out.amps.rows(); ++r) {
      const Index r0 = (r & low) | ((r & ~low) << 1);
      out.amps.row(r) = (amps.row(r0) + phase * amps.row(r0 | m)) * (1.0 / std::numbers::sqrt2);
    }
    return out;
  }

  // Rows permuted so that bit `k` is `order[k]`.
  Matrix reordered(const std::vector<QubitId>& order) const {
    std::vector<Index> target(qubits.size());
    for (std::size_t m = 0; m < qubits.size(); ++m) {
      target[m] = std::find(order.begin(), order.end(), qubits[m]) - order.begin();
    }
    Matrix out(amps.rows(), amps.cols());
    for (Index r = 0; r < amps.rows(); ++r) {
      Index t = 0;
      for (std::size_t m = 0; m < qubits.size(); ++m) {
        if (r & (static_cast<Index>(1) << m)) {
          t |= static_cast<Index>(1) << target[m];
        }
      }
      out.row(t) = amps.row(r);
    }
    return out;
  }
};

Register prepare_register(const Pattern& p, const Matrix& inputs) {
  if (p.space().size() > kMaxSimulatedQubits) {
    throw SimulationError("computation space of " + std::to_string(p.space().size()) +
                          " qubits exceeds the simulator limit of " +
                          std::to_string(kMaxSimulatedQubits));
  }
  const Index in_dim = static_cast<Index>(1) << p.inputs().size();
  if (inputs.rows() != in_dim) {
    throw SimulationError("input has dimension " + std::to_string(inputs.rows()) + ", expected " +
                          std::to_string(in_dim));
  }
  Register reg;
  reg.qubits = p.inputs();
  for (const auto& q : p.space()) {
    if (std::find(p.inputs().begin(), p.inputs().end(), q) == p.inputs().end()) {
      reg.qubits.push_back(q);
    }
  }
  const std::size_t extra = reg.qubits.size() - p.inputs().size();
  const Index copies = static_cast<Index>(1) << extra;
  const double plus = std::pow((1.0 / std::numbers::sqrt2), static_cast<double>(extra));
  reg.amps.resize(in_dim * copies, inputs.cols());
  for (Index k = 0; k < copies; ++k) {
    reg.amps.middleRows(k * in_dim, in_dim) = plus * inputs;
  }
  return reg;
}

// Applies a non-measurement command in place.
void apply_deterministic(Register& reg, OutcomeMap& outcomes, const Command& c) {
  if (const auto* e = std::get_if<Entangle>(&c)) {
    reg.cz(e->first(), e->second());
  } else if (const auto* x = std::get_if<Correct>(&c)) {
    if (x->signal.evaluate(outcomes)) {
      if (x->axis == Axis::X) {
        reg.pauli_x(x->qubit);
      } else {
        reg.pauli_z(x->qubit);
      }
    }
  } else if (const auto* s = std::get_if<Shift>(&c)) {
    auto it = outcomes.find(s->qubit);
    if (it == outcomes.end()) {
      throw MissingOutcomeError(s->qubit);
    }
    it->second ^= s->signal.evaluate(outcomes);
  }
}

struct Leaf {
  const Register& reg;
  const OutcomeMap& raw;
};

// Depth-first walk over all branches. `keep` decides whether a projected
// register is worth following; `visit` returns false to stop the walk.
class Explorer {
 public:
  Explorer(const Pattern& p, std::function<bool(const Matrix&)> keep,
           std::function<bool(const Leaf&)> visit)
      : p_(p), keep_(std::move(keep)), visit_(std::move(visit)) {}

  bool run(Register reg) { return explore(0, std::move(reg), {}, {}); }

 private:
  bool explore(std::size_t k, Register reg, OutcomeMap outcomes, OutcomeMap raw) {
    for (; k < p_.size(); ++k) {
      const Command& c = p_.sequence()[k];
      const auto* m = std::get_if<Measure>(&c);
      if (!m) {
        apply_deterministic(reg, outcomes, c);
        continue;
      }
      const double theta = effective_angle(*m, outcomes);
      Register branches[2] = {reg.project(m->qubit(), theta, 0),
                              reg.project(m->qubit(), theta, 1)};
      const double before = reg.amps.squaredNorm();
      const double after = branches[0].amps.squaredNorm() + branches[1].amps.squaredNorm();
      if (std::abs(before - after) > 1e-12 * std::max(before, 1e-300)) {
        throw std::logic_error("measurement did not conserve the norm");
      }
      for (int outcome = 0; outcome < 2; ++outcome) {
        if (!keep_(branches[outcome].amps)) {
          continue;
        }
        OutcomeMap next = outcomes;
        OutcomeMap next_raw = raw;
        next[m->qubit()] = outcome;
        next_raw[m->qubit()] = outcome;
        if (!explore(k + 1, std::move(branches[outcome]), std::move(next), std::move(next_raw))) {
          return false;
        }
      }
      return true;
    }
    return visit_(Leaf{reg, raw});
  }

  const Pattern& p_;
  std::function<bool(const Matrix&)> keep_;
  std::function<bool(const Leaf&)> visit_;
};

Register as_register(const QuantumState& s) {
  return Register{s.qubits, s.amplitudes};
}

QuantumState as_state(Register reg) {
  return QuantumState{std::move(reg.qubits), reg.amps.col(0)};
}

Matrix probe_inputs(std::size_t n_inputs) {
  const Index dim = static_cast<Index>(1) << n_inputs;
  constexpr Index kRandomProbes = 8;
  Matrix probes = Matrix::Zero(dim, dim + kRandomProbes);
  probes.leftCols(dim).setIdentity();
  std::mt19937_64 rng(0x6d62716370726f62ULL);
  std::normal_distribution<double> gauss;
  for (Index c = dim; c < probes.cols(); ++c) {
    for (Index r = 0; r < dim; ++r) {
      probes(r, c) = Complex(gauss(rng), gauss(rng));
    }
    probes.col(c).normalize();
  }
  return probes;
}

}  // namespace

double effective_angle(const Measure& m, const OutcomeMap& outcomes) {
  const double base = m.angle().value();
  const double signed_angle = m.s().evaluate(outcomes) ? -base : base;
  return signed_angle + (m.t().evaluate(outcomes) ? std::numbers::pi : 0.0);
}

ComputationState prepare(const Pattern& p, const Vector& input) {
  if (input.squaredNorm() == 0.0) {
    throw SimulationError("input state is zero");
  }
  return ComputationState{as_state(prepare_register(p, input)), {}};
}

std::vector<ComputationState> step(const ComputationState& state, const Command& command) {
  Register reg = as_register(state.quantum);
  OutcomeMap outcomes = state.outcomes;
  const auto* m = std::get_if<Measure>(&command);
  if (!m) {
    apply_deterministic(reg, outcomes, command);
    return {ComputationState{as_state(std::move(reg)), std::move(outcomes)}};
  }
  const double theta = effective_angle(*m, outcomes);
  std::vector<ComputationState> out;
  for (int outcome = 0; outcome < 2; ++outcome) {
    Register next = reg.project(m->qubit(), theta, outcome);
    if (next.amps.squaredNorm() == 0.0) {
      continue;
    }
    OutcomeMap next_outcomes = outcomes;
    next_outcomes[m->qubit()] = outcome;
    out.push_back(ComputationState{as_state(std::move(next)), std::move(next_outcomes)});
  }
  return out;
}

std::vector<Branch> run_all_branches(const Pattern& p, const Vector& input) {
  require_valid(p);
  const double input_norm2 = input.squaredNorm();
  if (input_norm2 == 0.0) {
    throw SimulationError("input state is zero");
  }
  std::vector<Branch> branches;
  Explorer explorer(
      p, [&](const Matrix& a) { return a.squaredNorm() >= kZeroBranchCutoff * input_norm2; },
      [&](const Leaf& leaf) {
        Branch b;
        b.outcomes = leaf.raw;
        b.output.qubits = p.outputs();
        b.output.amplitudes = leaf.reg.reordered(p.outputs()).col(0);
        b.probability = b.output.amplitudes.squaredNorm() / input_norm2;
        branches.push_back(std::move(b));
        return true;
      });
  explorer.run(prepare_register(p, input));
  return branches;
}

bool is_deterministic(const Pattern& p, double tol) {
  require_valid(p);
  const Matrix probes = probe_inputs(p.inputs().size());
  std::vector<std::optional<Vector>> reference(static_cast<std::size_t>(probes.cols()));
  bool deterministic = true;
  auto alive = [](const auto& column) { return column.squaredNorm() >= kZeroBranchCutoff; };
  Explorer explorer(
      p,
      [&](const Matrix& a) {
        for (Index c = 0; c < a.cols(); ++c) {
          if (alive(a.col(c))) {
            return true;
          }
        }
        return false;
      },
      [&](const Leaf& leaf) {
        for (Index c = 0; c < leaf.reg.amps.cols(); ++c) {
          const auto column = leaf.reg.amps.col(c);
          if (!alive(column)) {
            continue;
          }
          auto& ref = reference[static_cast<std::size_t>(c)];
          if (!ref) {
            ref = column;
          } else if (!collinear(*ref, column, tol)) {
            deterministic = false;
            return false;
          }
        }
        return true;
      });
  explorer.run(prepare_register(p, probes));
  return deterministic;
}

Matrix extract_unitary(const Pattern& p, double tol) {
  if (!is_deterministic(p, tol)) {
    throw NondeterministicPatternError("pattern is not deterministic");
  }
  const Index dim = static_cast<Index>(1) << p.inputs().size();
  Register reg = prepare_register(p, Matrix::Identity(dim, dim));
  OutcomeMap outcomes;
  for (const auto& c : p.sequence()) {
    const auto* m = std::get_if<Measure>(&c);
    if (!m) {
      apply_deterministic(reg, outcomes, c);
      continue;
    }
    const double theta = effective_angle(*m, outcomes);
    Register zero = reg.project(m->qubit(), theta, 0);
    if (zero.amps.squaredNorm() >= kZeroBranchCutoff * static_cast<double>(dim)) {
      reg = std::move(zero);
      outcomes[m->qubit()] = 0;
    } else {
      reg = reg.project(m->qubit(), theta, 1);
      outcomes[m->qubit()] = 1;
    }
  }
  Matrix u = reg.reordered(p.outputs());
  u.colwise().normalize();
  return u;
}

std::string format_branch_report(const std::vector<Branch>& branches, bool with_amplitudes) {
  std::ostringstream out;
  out << "measured:";
  if (!branches.empty()) {
    for (const auto& [q, _] : branches.front().outcomes) {
      out << ' ' << q;
    }
  }
  out << '\n';
  char buf[64];
  auto number = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return std::string(buf);
  };
  for (const auto& b : branches) {
    out << "branch ";
    if (b.outcomes.empty()) {
      out << '-';
    }
    for (const auto& [_, bit] : b.outcomes) {
      out << bit;
    }
    out << " p=" << number(b.probability);
    if (with_amplitudes) {
      out << " amps=[";
      for (Index k = 0; k < b.output.amplitudes.size(); ++k) {
        const Complex a = b.output.amplitudes(k);
        out << (k ? ", " : "") << number(a.real()) << (a.imag() < 0 ? "-" : "+")
            << number(std::abs(a.imag())) << 'i';
      }
      out << ']';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mbqc
