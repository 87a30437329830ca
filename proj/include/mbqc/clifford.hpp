#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/linalg.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

enum class PauliLetter { I, X, Y, Z };

/// `i^phase` times a tensor product of Pauli letters; absent qubits are I.
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(int phase, std::map<QubitId, PauliLetter> letters);

  /// 0..3, the power of i.
  int phase() const { return phase_; }
  const std::map<QubitId, PauliLetter>& letters() const { return letters_; }
  PauliLetter at(const QubitId& q) const;

  /// Matrix over `order`, qubit `order[k]` on bit `k`.
  Matrix matrix(const std::vector<QubitId>& order) const;

  friend PauliWord operator*(const PauliWord& a, const PauliWord& b);
  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  int phase_ = 0;
  std::map<QubitId, PauliLetter> letters_;
};

std::string to_string(const PauliWord& w);

/// Every measurement angle is an exact multiple of pi/2. Empty when some
/// measurement angle is inexact, since the classification would depend on
/// rounding.
std::optional<bool> is_pauli_only(const Pattern& p);

/// Some command reads a signal with nonempty support.
bool has_dependencies(const Pattern& p);

/// Removes every dependency of the measurements of a standard Pauli-only
/// pattern: X-action signals are erased (absorbed into the Z-action at pi/2),
/// and the Z-action is shifted forward onto later commands. Throws
/// std::invalid_argument when the pattern is not standard or not Pauli-only.
Pattern pauli_eliminate(const Pattern& p);

/// True iff `u` maps every X_k and Z_k to a Pauli word (with phase) under
/// conjugation, entrywise within `tol`. Needs a unitary on at most 3 qubits.
bool is_clifford(const Matrix& u, double tol = 1e-9);

struct TheoremCheck {
  std::string pattern;
  /// "no-dependency" or "pauli-only".
  std::string theorem;
  /// The hypothesis holds, so the unitary must be Clifford.
  bool applies = false;
  bool clifford = false;
  bool passed() const { return !applies || clifford; }
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool passed() const;
  /// One line per check: `<pattern> <theorem>: PASS|FAIL|EXEMPT (clifford=..)`.
  std::string to_text() const;
};

struct NamedPattern {
  std::string name;
  Pattern pattern;
};

/// For each pattern and each theorem: if its hypothesis holds, the extracted
/// unitary must be Clifford.
TheoremReport verify_no_dependency_theorems(const std::vector<NamedPattern>& patterns,
                                            double tol = 1e-9);

/// cz, h, teleport(0,0), cnot, p_half and the non-Clifford j(pi/4).
std::vector<NamedPattern> theorem_suite();

}  // namespace mbqc
