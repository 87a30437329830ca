#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc::random {

/// A runnable (D0, D1, D2) pattern of exactly `length` commands over random
/// E, M, X and Z commands in no particular order. Uses no shifts.
Pattern wild_pattern(std::mt19937_64& rng, std::size_t length);

/// One generator application on logical lines of a circuit.
struct Gate {
  enum Kind { J, CZ } kind;
  std::size_t line;
  std::size_t other = 0;  // second line of a CZ
  Angle angle;
};

/// A pattern glued from j and cz by compose/tensor/rename, with the gate list
/// it was built from. Input and output `k` carry line `k`.
struct GeneratorCircuit {
  std::size_t lines = 0;
  std::vector<Gate> gates;
  Pattern pattern;
};

/// Random circuit over at most `max_qubits` qubits. With `pauli_angles`, J
/// angles are multiples of pi/2; otherwise multiples of pi/8 or real radians.
GeneratorCircuit generator_circuit(std::mt19937_64& rng, std::size_t max_qubits = 8,
                                   bool pauli_angles = false);

/// Pattern for `gates` on `lines` lines, qubits numbered from 1.
GeneratorCircuit build_circuit(std::size_t lines, std::vector<Gate> gates);

}  // namespace mbqc::random
