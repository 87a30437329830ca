#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/linalg.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

/// Amplitudes over an ordered list of live qubits. Bit `m` of an amplitude
/// index is the state of `qubits[m]`. States are never renormalized.
struct QuantumState {
  std::vector<QubitId> qubits;
  Vector amplitudes;
};

struct ComputationState {
  QuantumState quantum;
  OutcomeMap outcomes;
};

/// One complete run: the physical outcome of every measurement (before any
/// signal shift), the unnormalized output over the pattern's output list, and
/// `|output|^2 / |input|^2`.
struct Branch {
  OutcomeMap outcomes;
  QuantumState output;
  double probability = 0.0;
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NondeterministicPatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest computation space the dense simulator accepts.
inline constexpr std::size_t kMaxSimulatedQubits = 22;

/// Branches whose squared norm is below this fraction of the input's are
/// treated as zero.
inline constexpr double kZeroBranchCutoff = 1e-24;

/// `input (x) |+...+>` over the whole space, inputs first, then the remaining
/// qubits in space order; empty outcome map.
ComputationState prepare(const Pattern& p, const Vector& input);

/// Executes one command. Measurements yield up to two successors (outcome 0
/// first), dropping exactly-zero ones and consuming the measured qubit.
std::vector<ComputationState> step(const ComputationState& state, const Command& command);

/// Angle actually measured: `(-1)^{s} angle + t pi` under `outcomes`.
double effective_angle(const Measure& m, const OutcomeMap& outcomes);

/// Depth-first enumeration of every nonzero branch, outcome 0 before 1.
std::vector<Branch> run_all_branches(const Pattern& p, const Vector& input);

/// All branch outputs are collinear within `tol`, for every computational
/// basis input and eight fixed pseudorandom inputs.
bool is_deterministic(const Pattern& p, double tol = 1e-9);

/// The isometry realised by a deterministic pattern, `2^|O| x 2^|I|`, defined
/// up to one global phase. Column `k` is the normalized output for basis input
/// `k` along the first nonzero branch.
Matrix extract_unitary(const Pattern& p, double tol = 1e-9);

/// Header line `measured: <qubits>` then `branch <bits> p=<probability>` per
/// branch, bits in qubit order, probability to 12 significant digits.
std::string format_branch_report(const std::vector<Branch>& branches, bool with_amplitudes);

}  // namespace mbqc
