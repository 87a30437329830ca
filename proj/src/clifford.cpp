#include "mbqc/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "mbqc/library.hpp"
#include "mbqc/simulator.hpp"

namespace mbqc {

namespace {

Matrix letter_matrix(PauliLetter l) {
  Matrix m = Matrix::Zero(2, 2);
  switch (l) {
    case PauliLetter::I:
      m << 1, 0, 0, 1;
      break;
    case PauliLetter::X:
      m << 0, 1, 1, 0;
      break;
    case PauliLetter::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliLetter::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

// Single-qubit product `a b = i^phase c`.
std::pair<int, PauliLetter> multiply(PauliLetter a, PauliLetter b) {
  if (a == PauliLetter::I) return {0, b};
  if (b == PauliLetter::I) return {0, a};
  if (a == b) return {0, PauliLetter::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<PauliLetter>(6 - ia - ib);
  // XY = iZ, YZ = iX, ZX = iY; the reverse orders pick up -i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? 1 : 3, c};
}

Complex i_power(int k) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

PauliWord::PauliWord(int phase, std::map<QubitId, PauliLetter> letters)
    : phase_(((phase % 4) + 4) % 4), letters_(std::move(letters)) {
  std::erase_if(letters_, [](const auto& kv) { return kv.second == PauliLetter::I; });
}

PauliLetter PauliWord::at(const QubitId& q) const {
  auto it = letters_.find(q);
  return it == letters_.end() ? PauliLetter::I : it->second;
}

Matrix PauliWord::matrix(const std::vector<QubitId>& order) const {
  Matrix m = Matrix::Identity(1, 1);
  for (const auto& q : order) {
    m = kron(letter_matrix(at(q)), m);
  }
  return i_power(phase_) * m;
}

PauliWord operator*(const PauliWord& a, const PauliWord& b) {
  int phase = a.phase_ + b.phase_;
  std::map<QubitId, PauliLetter> letters = a.letters_;
  for (const auto& [q, l] : b.letters_) {
    const auto [k, c] = multiply(a.at(q), l);
    phase += k;
    letters[q] = c;
  }
  return PauliWord(phase, std::move(letters));
}

std::string to_string(const PauliWord& w) {
  static const char* phases[4] = {"+", "+i", "-", "-i"};
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  std::string out = phases[w.phase()];
  if (w.letters().empty()) {
    return out + "I";
  }
  for (const auto& [q, l] : w.letters()) {
    out += letters[static_cast<int>(l)];
    out += q.label();
  }
  return out;
}

std::optional<bool> is_pauli_only(const Pattern& p) {
  bool pauli = true;
  for (const auto& c : p.sequence()) {
    if (const auto* m = std::get_if<Measure>(&c)) {
      if (!m->angle().is_exact()) {
        return std::nullopt;
      }
      pauli = pauli && m->angle().is_pauli();
    }
  }
  return pauli;
}

bool has_dependencies(const Pattern& p) {
  for (const auto& c : p.sequence()) {
    for (const auto& s : signals_of(c)) {
      if (s.has_support()) {
        return true;
      }
    }
  }
  return false;
}

namespace {

Command substituted(const Command& c, const QubitId& q, const Signal& t) {
  if (const auto* m = std::get_if<Measure>(&c)) {
    return Measure(m->qubit(), m->angle(), m->s().substitute(q, t), m->t().substitute(q, t));
  }
  if (const auto* x = std::get_if<Correct>(&c)) {
    return Correct{x->axis, x->qubit, x->signal.substitute(q, t)};
  }
  if (const auto* s = std::get_if<Shift>(&c)) {
    return Shift{s->qubit, s->signal.substitute(q, t)};
  }
  return c;
}

}  // namespace

Pattern pauli_eliminate(const Pattern& p) {
  require_valid(p);
  if (!is_emc(p)) {
    throw std::invalid_argument("pauli_eliminate needs a standard pattern");
  }
  const std::optional<bool> pauli = is_pauli_only(p);
  if (!pauli) {
    throw std::invalid_argument("pauli_eliminate: inexact measurement angle");
  }
  if (!*pauli) {
    throw std::invalid_argument("pauli_eliminate needs Pauli measurements only");
  }
  std::vector<Command> seq = p.sequence();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (const auto* sh = std::get_if<Shift>(&seq[k])) {
      const Shift shift = *sh;
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(k));
      for (std::size_t r = k; r < seq.size(); ++r) {
        seq[r] = substituted(seq[r], shift.qubit, shift.signal);
      }
      --k;
      continue;
    }
    const auto* m = std::get_if<Measure>(&seq[k]);
    if (!m) {
      continue;
    }
    // Bring the angle to 0 (x) or pi/2 (y), moving a pi into the Z-action.
    const bool flip = m->angle().pi_numerator() * 2 / m->angle().pi_denominator() >= 2;
    const Angle base = flip ? m->angle().plus_pi() : m->angle();
    const bool is_y = base.equals_exactly(1, 2);
    Signal t = m->t() + Signal(flip ? 1 : 0);
    if (is_y) {
      t += m->s();
    }
    const QubitId q = m->qubit();
    seq[k] = Measure(q, base);
    for (std::size_t r = k + 1; r < seq.size(); ++r) {
      seq[r] = substituted(seq[r], q, t);
    }
  }
  return p.with_sequence(std::move(seq));
}

bool is_clifford(const Matrix& u, double tol) {
  const Eigen::Index dim = u.rows();
  if (u.cols() != dim || dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("is_clifford needs a square 2^n matrix");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  if (n > 3) {
    throw std::invalid_argument("is_clifford supports at most 3 qubits");
  }
  if (!is_isometry(u, 1e-8)) {
    throw std::invalid_argument("is_clifford needs a unitary matrix");
  }
  std::vector<QubitId> order;
  for (int k = 0; k < n; ++k) {
    order.emplace_back(static_cast<std::int64_t>(k));
  }
  std::vector<Matrix> words;
  for (int code = 0; code < (1 << (2 * n)); ++code) {
    std::map<QubitId, PauliLetter> letters;
    for (int k = 0; k < n; ++k) {
      letters[order[k]] = static_cast<PauliLetter>((code >> (2 * k)) & 3);
    }
    for (int phase = 0; phase < 4; ++phase) {
      words.push_back(PauliWord(phase, letters).matrix(order));
    }
  }
  for (int k = 0; k < n; ++k) {
    for (PauliLetter g : {PauliLetter::X, PauliLetter::Z}) {
      const Matrix image = u * PauliWord(0, {{order[k], g}}).matrix(order) * u.adjoint();
      bool found = false;
      for (const Matrix& w : words) {
        if ((image - w).cwiseAbs().maxCoeff() <= tol) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

bool TheoremReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) {
      return false;
    }
  }
  return true;
}

std::string TheoremReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.pattern << ' ' << c.theorem << ": "
        << (!c.applies ? "EXEMPT" : c.clifford ? "PASS" : "FAIL")
        << " (clifford=" << (c.clifford ? "yes" : "no") << ")\n";
  }
  return out.str();
}

TheoremReport verify_no_dependency_theorems(const std::vector<NamedPattern>& patterns,
                                            double tol) {
  TheoremReport report;
  for (const auto& [name, p] : patterns) {
    const bool clifford = is_clifford(extract_unitary(p, tol), tol);
    report.checks.push_back({name, "no-dependency", !has_dependencies(p), clifford});
    report.checks.push_back({name, "pauli-only", is_pauli_only(p).value_or(false), clifford});
  }
  return report;
}

std::vector<NamedPattern> theorem_suite() {
  const Pattern local({1, 2}, {1, 2}, {1, 2},
                      {Entangle(1, 2), correct_x(1), correct_z(1)});
  return {
      {"cz", library::cz()},
      {"h", library::h()},
      {"teleport(0,0)", library::teleport(Angle(), Angle())},
      {"cnot", library::cnot()},
      {"p_half", library::p_half()},
      {"z1x1e12", local},
      {"j(pi/4)", library::j(Angle::pi_fraction(1, 4))},
  };
}

}  // namespace mbqc
