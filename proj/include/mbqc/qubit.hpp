#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace mbqc {

/// Opaque qubit label.
///
/// Labels are short identifiers such as `1`, `2'`, `a` or `A`. They are
/// ordered "naturally": labels starting with digits come first and compare by
/// their numeric prefix, then by the remainder (so `2 < 2' < 3 < 10`); all
/// other labels compare lexicographically.
class QubitId {
 public:
  QubitId() = default;
  QubitId(std::int64_t index);  // NOLINT(google-explicit-constructor)
  QubitId(std::string_view label);  // NOLINT(google-explicit-constructor)
  QubitId(const char* label) : QubitId(std::string_view(label)) {}  // NOLINT

  const std::string& label() const { return label_; }

  /// True when `text` is a syntactically valid label: `[A-Za-z0-9_]+` followed
  /// by any number of primes.
  static bool is_valid_label(std::string_view text);

  friend bool operator==(const QubitId& a, const QubitId& b) { return a.label_ == b.label_; }
  friend std::strong_ordering operator<=>(const QubitId& a, const QubitId& b);

 private:
  std::string label_;
  bool numeric_ = false;
  std::uint64_t number_ = 0;
  std::size_t digits_ = 0;
};

std::ostream& operator<<(std::ostream& out, const QubitId& q);

/// Injective relabelling of qubits.
using QubitMap = std::map<QubitId, QubitId>;

}  // namespace mbqc

template <>
struct std::hash<mbqc::QubitId> {
  std::size_t operator()(const mbqc::QubitId& q) const noexcept {
    return std::hash<std::string>{}(q.label());
  }
};
