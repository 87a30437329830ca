#pragma once

#include <string>
#include <vector>

#include "mbqc/linalg.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc::library {

/// Trivial pattern on one qubit: V = I = O = {q}, no commands.
Pattern identity(const QubitId& q);

/// One fresh qubit in |+>: V = O = {q}, no inputs, no commands.
Pattern plus(const QubitId& q);

/// X_2^{s_1} M_1^{-alpha} E_12 over {1, 2}, input 1, output 2.
Pattern j(const Angle& alpha);

/// E_12 with I = O = (1, 2).
Pattern cz();

/// j(0).
Pattern h();

// The composites below are wild: they are glued from j/cz/identity with
// compose, tensor and rename, and are not standardized.

/// J(beta)(2,3) o J(alpha)(1,2).
Pattern teleport(const Angle& alpha, const Angle& beta);

/// J(alpha)(2,3) o H(1,2).
Pattern rx(const Angle& alpha);

/// H(2,3) o J(alpha)(1,2): the three-qubit z-rotation.
Pattern rz(const Angle& alpha);

/// H(4,5) o Rx(alpha)(2,3,4) o H(1,2): the five-qubit z-rotation.
Pattern rz_euler(const Angle& alpha);

/// J(0)(4,5) o J(alpha)(3,4) o J(beta)(2,3) o J(gamma)(1,2).
Pattern rotation(const Angle& alpha, const Angle& beta, const Angle& gamma);

/// (I(1) (x) H(3,4)) o CZ(1,3) o (I(1) (x) H(2,3)); inputs (1, 2), outputs
/// (1, 4), control on qubit 1.
Pattern cnot();

/// H(2,3) o J(pi/2)(1,2). Its Pauli-eliminated standard form is the phase
/// gate pattern X_3^{s_2} Z_3^{s_1+1} M_2^x M_1^y E_23 E_12.
Pattern p_half();

/// Label of GHZ qubit `level`, primed or not (`2`, `2'`).
QubitId ghz_qubit(int level, bool primed);

/// No-input pattern preparing |0...0> + |1...1> on outputs 1, 2', ..., n'.
/// Throws std::invalid_argument for n < 2.
Pattern ghz(int n);

/// Halved angles shared by the controlled-U pattern and its reference matrix.
struct ControlledUAngles {
  Angle alpha_prime;  // alpha + beta/2 + gamma/2 + delta/2
  Angle beta;
  Angle half_beta;
  Angle half_gamma;
  Angle half_delta;
};

ControlledUAngles controlled_u_angles(const Angle& alpha, const Angle& beta, const Angle& gamma,
                                      const Angle& delta);

/// The 14-qubit controlled-U pattern over a..k, A, B, C. Inputs (A, a),
/// outputs (C, k); the A/C line is the control.
Pattern controlled_u(const Angle& alpha, const Angle& beta, const Angle& gamma, const Angle& delta);

/// J(alpha) = (1/sqrt 2) [[1, e^{i alpha}], [1, -e^{i alpha}]].
Matrix j_matrix(const Angle& alpha);

/// The controlled-U unitary evaluated directly from its J/CZ decomposition,
/// control on bit 0.
Matrix controlled_u_matrix(const Angle& alpha, const Angle& beta, const Angle& gamma,
                           const Angle& delta);

/// A builtin pattern by name (j, cz, h, teleport, rx, rz, rz5, rotation, cnot,
/// p_half, ghz, cu) with numeric parameters. Angle parameters are radians;
/// `ghz` takes n. Missing parameters default to 0 (n = 3 for ghz).
Pattern by_name(const std::string& name, const std::vector<Angle>& angles, int n = 3);

/// Names accepted by by_name.
const std::vector<std::string>& names();

}  // namespace mbqc::library
