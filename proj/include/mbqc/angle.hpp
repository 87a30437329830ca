#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace mbqc {

/// Measurement angle.
///
/// An angle is a rational multiple of pi, kept reduced and normalized into
/// [0, 2), optionally plus a real offset in radians. Angles built only from
/// rationals are *exact*; anything touched by a real offset is *inexact*.
/// Negation and adding pi act on the rational part and flip the sign of the
/// offset, so both stay lossless for inexact angles too.
class Angle {
 public:
  /// Zero, exact.
  Angle() = default;

  /// `(numerator / denominator) * pi`, exact.
  static Angle pi_fraction(std::int64_t numerator, std::int64_t denominator = 1);
  /// Real number of radians, inexact.
  static Angle radians(double value);

  bool is_exact() const { return exact_; }
  std::int64_t pi_numerator() const { return num_; }
  std::int64_t pi_denominator() const { return den_; }
  double offset() const { return offset_; }

  /// Value in radians normalized into [0, 2*pi).
  double value() const;

  /// True iff exact and equal to `numerator/denominator * pi` modulo 2*pi.
  bool equals_exactly(std::int64_t numerator, std::int64_t denominator = 1) const;
  /// True iff exact and a multiple of pi/2 (the X/Y measurement planes).
  bool is_pauli() const;

  Angle operator-() const;
  Angle plus_pi() const;
  /// Multiply by the rational `numerator/denominator`. Applied to the
  /// normalized representative, so `scaled(1, 2)` of `3/2 pi` is `3/4 pi`.
  Angle scaled(std::int64_t numerator, std::int64_t denominator) const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }
  friend bool operator==(const Angle& a, const Angle& b);

 private:
  Angle(std::int64_t num, std::int64_t den, double offset, bool exact);
  void normalize();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double offset_ = 0.0;
  bool exact_ = true;
};

/// `0`, `p/q pi`, or `<radians>[ + p/q pi]` for inexact angles. Radians are
/// printed in shortest round-trip form with a decimal point.
std::string to_string(const Angle& a);
std::ostream& operator<<(std::ostream& out, const Angle& a);

}  // namespace mbqc
