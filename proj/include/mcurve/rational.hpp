#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "mcurve/checked.hpp"

namespace mcurve {

/**
 * Exact rational number over 64-bit integers.
 *
 * Always stored normalized: den > 0 and gcd(|num|, den) = 1. Comparisons
 * cross-multiply in 128-bit arithmetic and never overflow; arithmetic that
 * produces a result outside the 64-bit range throws ErrorKind::Overflow.
 */
class Rational {
 public:
  using Int = std::int64_t;

  constexpr Rational() = default;
  Rational(Int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  static Rational from_wide(checked::Wide num, checked::Wide den);

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mcurve
