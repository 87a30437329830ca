#include "mbqc/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mbqc {

Angle::Angle(std::int64_t num, std::int64_t den, double offset, bool exact)
    : num_(num), den_(den), offset_(offset), exact_(exact) {
  normalize();
}

void Angle::normalize() {
  if (den_ == 0) {
    throw std::invalid_argument("angle denominator must be nonzero");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  const std::int64_t period = 2 * den_;
  num_ %= period;
  if (num_ < 0) {
    num_ += period;
  }
  if (num_ == 0) {
    den_ = 1;
  }
}

Angle Angle::pi_fraction(std::int64_t numerator, std::int64_t denominator) {
  return Angle(numerator, denominator, 0.0, true);
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("angle must be finite");
  }
  return Angle(0, 1, value, false);
}

double Angle::value() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double v = std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_) + offset_;
  v = std::fmod(v, two_pi);
  if (v < 0) {
    v += two_pi;
  }
  return v;
}

bool Angle::equals_exactly(std::int64_t numerator, std::int64_t denominator) const {
  return exact_ && *this == pi_fraction(numerator, denominator);
}

bool Angle::is_pauli() const { return exact_ && (den_ == 1 || den_ == 2); }

Angle Angle::operator-() const { return Angle(-num_, den_, -offset_, exact_); }

Angle Angle::plus_pi() const { return Angle(num_ + den_, den_, offset_, exact_); }

Angle Angle::scaled(std::int64_t numerator, std::int64_t denominator) const {
  if (denominator == 0) {
    throw std::invalid_argument("scale denominator must be nonzero");
  }
  const double factor = static_cast<double>(numerator) / static_cast<double>(denominator);
  return Angle(num_ * numerator, den_ * denominator, offset_ * factor, exact_);
}

Angle operator+(const Angle& a, const Angle& b) {
  const std::int64_t den = std::lcm(a.den_, b.den_);
  const std::int64_t num = a.num_ * (den / a.den_) + b.num_ * (den / b.den_);
  return Angle(num, den, a.offset_ + b.offset_, a.exact_ && b.exact_);
}

bool operator==(const Angle& a, const Angle& b) {
  return a.exact_ == b.exact_ && a.num_ == b.num_ && a.den_ == b.den_ && a.offset_ == b.offset_;
}

namespace {

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string format_fraction(std::int64_t num, std::int64_t den) {
  return std::to_string(num) + "/" + std::to_string(den) + " pi";
}

}  // namespace

std::string to_string(const Angle& a) {
  if (a.is_exact()) {
    if (a.pi_numerator() == 0) {
      return "0";
    }
    return format_fraction(a.pi_numerator(), a.pi_denominator());
  }
  std::string s = format_real(a.offset());
  if (a.pi_numerator() != 0) {
    s += " + " + format_fraction(a.pi_numerator(), a.pi_denominator());
  }
  return s;
}

std::ostream& operator<<(std::ostream& out, const Angle& a) { return out << to_string(a); }

}  // namespace mbqc
