#include <doctest.h>

#include <limits>
#include <sstream>

#include "mcurve/rational.hpp"

using mcurve::Error;
using mcurve::ErrorKind;
using mcurve::Rational;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(-8, -12) == Rational(2, 3));
}

TEST_CASE("rational zero denominator is rejected") {
  try {
    Rational(1, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational ordering uses exact cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK_FALSE(Rational(2, 4) < Rational(1, 2));
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(Rational(big - 1, big) < Rational(big, big - 1));
  CHECK(Rational(big - 2, big - 1) < Rational(big - 1, big));
}

TEST_CASE("rational rendering") {
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0).str() == "0");
  std::ostringstream os;
  os << Rational(5, -10);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("rational overflow is loud") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  try {
    (void)(Rational(big) + Rational(1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK_THROWS_AS((void)(Rational(big, 3) * Rational(big, 5)), Error);
}
