#include <doctest.h>

#include "mcurve/moduli.hpp"
#include "mcurve/stability.hpp"
#include "oracles.hpp"

using namespace mcurve;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("moduli point invariants") {
  CHECK(moduli_rd(ModuliPoint(CurveContext(2, 0, -3), 1, 1, 0, 1)) == Invariants{3, -2});
  CHECK(moduli_rd(ModuliPoint(CurveContext(3, 0, -1), 2, 2, 5, 1)) == Invariants{8, 4});
  for (Int l = -4; l <= -1; ++l) {
    const Int n = 4, a = 2, k = 3;
    CHECK(moduli_rd(ModuliPoint(CurveContext(n, 0, l), a, k, 0, 0)).degree ==
          (n * (n - 1) * a + k * (k - 1)) * l / 2);
  }
  CHECK(kind_of([] { ModuliPoint(CurveContext(2, 0, -1), 0, 1, 0, 0); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { ModuliPoint(CurveContext(2, 0, -1), 1, 2, 0, 0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("moduli point invariants match rigid invariants") {
  for (Int n = 2; n <= 5; ++n)
    for (Int a = 1; a <= 3; ++a)
      for (Int k = 1; k < n; ++k)
        for (Int l = -4; l <= -1; ++l)
          for (Int eps = -6; eps <= 6; eps += 3)
            for (Int delta = -6; delta <= 6; delta += 4) {
              const ModuliPoint p(CurveContext(n, 2, l), a, k, eps, delta);
              CHECK(moduli_rd(p) == rigid_invariants(p.rigid_sheaf()));
            }
}

TEST_CASE("moduli dimension") {
  CHECK(moduli_dim(CurveContext(2, 2, -1), 1, 1) == 8);
  CHECK(moduli_dim(CurveContext(2, 0, -2), 1, 1) == 0);
  CHECK(moduli_dim(CurveContext(2, 2, -3), 1, 1) == 12);
  for (Int l = -5; l <= -1; ++l) {
    CHECK(moduli_dim(CurveContext(3, 1, l), 2, 1) == 1 - (3 * 4 + 1 * 2 * 2 + 0) * l);
  }
  for (Int g = 0; g <= 5; ++g)
    for (Int n = 2; n <= 5; ++n)
      for (Int a = 1; a <= 3; ++a)
        for (Int k = 1; k < n; ++k)
          for (Int l = -4; l <= -1; ++l)
            CHECK(moduli_dim(CurveContext(n, g, l), a, k) == oracle::moduli_dim(g, n, a, k, l));
}

TEST_CASE("moduli dimension is affine in degL and genus") {
  for (Int n = 2; n <= 4; ++n)
    for (Int a = 1; a <= 3; ++a)
      for (Int k = 1; k < n; ++k) {
        const Int coeff_l = (n * (n - 1) * a * a + 2 * k * (n - 1) * a + k * (k - 1)) / 2;
        const Int coeff_g = n * a * a + k * (2 * a + 1);
        for (Int g = 0; g <= 4; ++g) {
          for (Int l = -5; l <= -2; ++l) {
            CHECK(moduli_dim(CurveContext(n, g, l), a, k) -
                      moduli_dim(CurveContext(n, g, l + 1), a, k) ==
                  coeff_l);
            CHECK(moduli_dim(CurveContext(n, g + 1, l), a, k) -
                      moduli_dim(CurveContext(n, g, l), a, k) ==
                  coeff_g);
          }
        }
      }
}

TEST_CASE("non-emptiness criterion") {
  CHECK(moduli_nonempty(ModuliPoint(CurveContext(2, 2, -3), 1, 1, 0, 1)));
  CHECK_FALSE(moduli_nonempty(ModuliPoint(CurveContext(2, 2, -3), 1, 1, 0, 0)));
  for (Int delta = -10; delta <= 10; ++delta) {
    CHECK_FALSE(moduli_nonempty(ModuliPoint(CurveContext(2, 2, -1), 1, 1, 0, delta)));
  }
  CHECK(kind_of([] { (void)moduli_nonempty(ModuliPoint(CurveContext(2, 1, -3), 1, 1, 0, 1)); }) ==
        ErrorKind::GenusTooSmall);
}

TEST_CASE("non-emptiness band sits inside the strict rigid band") {
  for (Int n = 2; n <= 4; ++n)
    for (Int a = 1; a <= 3; ++a)
      for (Int k = 1; k < n; ++k)
        for (Int l = -4; l <= -1; ++l)
          for (Int eps = -6; eps <= 6; ++eps)
            for (Int delta = -6; delta <= 6; ++delta) {
              const ModuliPoint p(CurveContext(n, 2, l), a, k, eps, delta);
              const bool band = moduli_nonempty(p);
              CHECK(band == oracle::moduli_band(n, a, k, eps, delta, l));
              if (band) CHECK(equCC3_check(p.rigid_sheaf()).strict);
            }
}

TEST_CASE("vector bundle moduli invariants") {
  CHECK(vb_moduli_rd(CurveContext(3, 0, -1), 2, 1) == Invariants{6, -3});
  CHECK(vb_moduli_rd(CurveContext(2, 0, -2), 3, 2) == Invariants{6, -2});
  for (Int n = 2; n <= 6; ++n) {
    CHECK(vb_moduli_rd(CurveContext(n, 0, -2), 1, 0) == Invariants{n, n * (n - 1) * -2 / 2});
  }
  for (Int n = 2; n <= 6; ++n) {
    CHECK(vb_moduli_rd(CurveContext(n + 1, 0, -1), 2, 0).degree <
          vb_moduli_rd(CurveContext(n, 0, -1), 2, 0).degree);
  }
  CHECK(kind_of([] { (void)vb_moduli_rd(CurveContext(2, 0, -1), 0, 0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("extension dimension") {
  CHECK(ext_dim_rr(0, {1, 0}, {1, 0}, 1) == 0);
  CHECK(ext_dim_rr(2, {1, 0}, {1, 0}, 1) == 2);
  CHECK(ext_dim_rr(2, {2, 0}, {2, -4}, 0) == 12);
  for (Int g = 0; g <= 4; ++g)
    for (Int d = -3; d <= 0; ++d) {
      const Int expected = oracle::ext1(g, 2, 1, 3, d, 0);
      if (expected >= 0) CHECK(ext_dim_rr(g, {2, 1}, {3, d}, 0) == expected);
    }
  CHECK(kind_of([] { (void)ext_dim_rr(0, {1, 0}, {1, 5}, 0); }) == ErrorKind::InconsistentInput);
  CHECK(kind_of([] { (void)ext_dim_rr(-1, {1, 0}, {1, 0}, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("scan") {
  const auto rows = scan(CurveContext(2, 2, -3), 1, 1, {0, 2}, {0, 0});
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].nonempty);
  CHECK(rows[1].nonempty);
  CHECK_FALSE(rows[2].nonempty);
  CHECK(rows[1] == RegionRow{1, 0, 3, -2, true, 12});
  CHECK(scan(CurveContext(2, 2, -1), 1, 1, {-5, 5}, {0, 0}).size() == 11);
  for (const RegionRow& r : scan(CurveContext(2, 2, -1), 1, 1, {-5, 5}, {0, 0})) {
    CHECK_FALSE(r.nonempty);
  }
}

TEST_CASE("scan ordering is epsilon-major") {
  const auto rows = scan(CurveContext(3, 2, -2), 2, 1, {-1, 1}, {4, 5});
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].epsilon == 4);
  CHECK(rows[0].delta == -1);
  CHECK(rows[2].delta == 1);
  CHECK(rows[3].epsilon == 5);
  for (const RegionRow& r : rows) {
    const ModuliPoint p(CurveContext(3, 2, -2), 2, 1, r.epsilon, r.delta);
    CHECK(moduli_rd(p) == Invariants{r.R, r.d});
    CHECK(r.nonempty == moduli_nonempty(p));
    CHECK(r.dim == moduli_dim(p.context(), 2, 1));
  }
}

TEST_CASE("scan errors") {
  CHECK(kind_of([] { (void)scan(CurveContext(2, 2, -1), 1, 1, {0, 999}, {0, 999}, 1000); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { (void)scan(CurveContext(2, 2, -1), 1, 1, {1, 0}, {0, 0}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)scan(CurveContext(2, 1, -1), 1, 1, {0, 0}, {0, 0}); }) ==
        ErrorKind::GenusTooSmall);
}
