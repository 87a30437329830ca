#include <gtest/gtest.h>

#include <random>

#include "mbqc/clifford.hpp"
#include "mbqc/graphs.hpp"
#include "mbqc/library.hpp"
#include "mbqc/random_patterns.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/simulator.hpp"
#include "oracle.hpp"

using namespace mbqc;

namespace {

Matrix diag(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Matrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

}  // namespace

TEST(PauliWord, Products) {
  const PauliWord x(0, {{1, PauliLetter::X}});
  const PauliWord y(0, {{1, PauliLetter::Y}});
  const PauliWord z(0, {{1, PauliLetter::Z}});
  EXPECT_EQ(x * y, PauliWord(1, {{1, PauliLetter::Z}}));
  EXPECT_EQ(y * x, PauliWord(3, {{1, PauliLetter::Z}}));
  EXPECT_EQ(z * x, PauliWord(1, {{1, PauliLetter::Y}}));
  EXPECT_EQ(x * x, PauliWord());
  const std::vector<QubitId> order = {1, 2};
  const PauliWord xz(0, {{1, PauliLetter::X}, {2, PauliLetter::Z}});
  const PauliWord yy(2, {{1, PauliLetter::Y}, {2, PauliLetter::Y}});
  EXPECT_LT(((xz * yy).matrix(order) - xz.matrix(order) * yy.matrix(order)).norm(), 1e-12);
  // Qubit order[0] is the low bit: X on qubit 1 flips bit 0.
  EXPECT_EQ(x.matrix(order)(1, 0), Complex(1.0));
  EXPECT_EQ(to_string(PauliWord(3, {{2, PauliLetter::Y}})), "-iY2");
}

TEST(Clifford, KnownGates) {
  EXPECT_TRUE(is_clifford(oracle::hadamard()));
  EXPECT_TRUE(is_clifford(diag(1, Complex(0, 1))));
  EXPECT_TRUE(is_clifford(oracle::cz()));
  EXPECT_TRUE(is_clifford(oracle::j(std::numbers::pi / 2)));
  EXPECT_TRUE(is_clifford(oracle::j(3 * std::numbers::pi / 2)));
  EXPECT_TRUE(is_clifford(oracle::j(std::numbers::pi)));
  EXPECT_FALSE(is_clifford(oracle::j(std::numbers::pi / 4)));
  EXPECT_FALSE(is_clifford(diag(1, std::polar(1.0, 0.3))));
  EXPECT_THROW(is_clifford(Matrix::Identity(16, 16)), std::invalid_argument);
  EXPECT_THROW(is_clifford(2.0 * oracle::hadamard()), std::invalid_argument);
}

TEST(Clifford, InvariantUnderPhaseAndPauliFactors) {
  std::mt19937_64 rng(5);
  const std::vector<QubitId> order = {"q0", "q1"};
  const Matrix cnot = oracle::embed(oracle::hadamard(), 1, 2) * oracle::cz() *
                      oracle::embed(oracle::hadamard(), 1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliWord w(0, {{"q0", static_cast<PauliLetter>(rng() % 4)},
                          {"q1", static_cast<PauliLetter>(rng() % 4)}});
    const Complex phase = std::polar(1.0, 0.1 * trial);
    EXPECT_TRUE(is_clifford(phase * w.matrix(order) * cnot));
    const Matrix u = random_unitary(rng, 4);
    EXPECT_FALSE(is_clifford(phase * w.matrix(order) * u));
  }
}

TEST(PauliEliminate, PhaseGateExample) {
  const Pattern p = pauli_eliminate(standardize(library::p_half()).pattern);
  const std::vector<Command> want = {
      Entangle(1, 2), Entangle(2, 3), Measure(1, Angle::pi_fraction(1, 2)), Measure(2, Angle()),
      correct_z(3, Signal(1, {1})), correct_x(3, Signal::outcome(2))};
  EXPECT_EQ(p.sequence(), want);
}

TEST(PauliEliminate, YMeasurementFoldsXActionIntoZAction) {
  // M_2^y[s_1] followed by X_3^{s_2}: the X-action becomes a flip of s_2.
  const Pattern p({1, 2, 3}, {1}, {3},
                  {Entangle(1, 2), Entangle(2, 3), Measure(1, Angle()),
                   Measure(2, Angle::pi_fraction(1, 2), Signal::outcome(1)),
                   correct_z(3, Signal::outcome(1)), correct_x(3, Signal::outcome(2))});
  const Pattern e = pauli_eliminate(p);
  EXPECT_EQ(e.sequence()[3], Command(Measure(2, Angle::pi_fraction(1, 2))));
  EXPECT_EQ(e.sequence()[5], correct_x(3, Signal(0, {1, 2})));
  EXPECT_TRUE(equal_up_to_phase(extract_unitary(p), extract_unitary(e), 1e-9));
}

TEST(PauliEliminate, RejectsNonPauliOrNonStandard) {
  EXPECT_THROW(pauli_eliminate(library::j(Angle::pi_fraction(1, 4))), std::invalid_argument);
  EXPECT_THROW(pauli_eliminate(library::teleport({}, {})), std::invalid_argument);
  EXPECT_FALSE(is_pauli_only(library::j(Angle::radians(0.0))).has_value());
  EXPECT_TRUE(*is_pauli_only(library::j(Angle::pi_fraction(3, 2))));
}

TEST(PauliEliminate, RandomPauliCircuitsKeepTheirUnitaryAndFlatten) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto circuit = random::generator_circuit(rng, 8, true);
    const Pattern wild = circuit.pattern;
    for (const Pattern& standard :
         {standardize(wild).pattern, standardize_extended(wild).pattern}) {
      const Pattern flat = pauli_eliminate(standard);
      EXPECT_LE(depth(flat), 2u);
      for (const auto& c : flat.sequence()) {
        if (const auto* m = std::get_if<Measure>(&c)) {
          EXPECT_TRUE(m->s().empty() && m->t().empty());
        }
      }
      const Matrix u = extract_unitary(wild);
      EXPECT_TRUE(equal_up_to_phase(u, extract_unitary(flat), 1e-9));
      EXPECT_TRUE(is_clifford(u));
    }
  }
}

TEST(Theorems, SuiteReport) {
  const TheoremReport r = verify_no_dependency_theorems(theorem_suite());
  EXPECT_TRUE(r.passed()) << r.to_text();
  const std::string text = r.to_text();
  EXPECT_NE(text.find("cnot pauli-only: PASS (clifford=yes)"), std::string::npos) << text;
  EXPECT_NE(text.find("j(pi/4) pauli-only: EXEMPT (clifford=no)"), std::string::npos) << text;
  EXPECT_NE(text.find("cz no-dependency: PASS (clifford=yes)"), std::string::npos) << text;
}
