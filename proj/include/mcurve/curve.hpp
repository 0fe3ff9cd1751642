#pragma once

#include <cstdint>
#include <iosfwd>

#include "mcurve/rational.hpp"

namespace mcurve {

using Int = std::int64_t;

/**
 * Ambient data of a primitive multiple curve C_n with reduced curve C.
 *
 * Holds the multiplicity n, the genus g of C and deg(L), where L is the
 * conormal line bundle of C. Construction enforces n >= 2, g >= 0 and
 * deg(L) < 0; there is no way to build a context outside that regime.
 */
class CurveContext {
 public:
  CurveContext(Int multiplicity, Int genus, Int deg_l);

  Int n() const noexcept { return n_; }
  Int genus() const noexcept { return g_; }
  Int deg_l() const noexcept { return l_; }

  friend bool operator==(const CurveContext&, const CurveContext&) = default;

 private:
  Int n_;
  Int g_;
  Int l_;
};

/// A vector bundle on the smooth curve C, seen only through (rank, degree).
struct BundleOnC {
  Int rank = 0;
  Int deg = 0;

  friend bool operator==(const BundleOnC&, const BundleOnC&) = default;
};

/// Validated constructor: rank must be non-negative.
BundleOnC make_bundle(Int rank, Int deg);

/// B ⊗ L^i for deg(L) = l: the degree shifts by rank * i * l.
BundleOnC twist(const BundleOnC& b, Int i, Int l);

/// μ(B) = deg/rank; ZeroRank when the rank is 0.
Rational bundle_slope(const BundleOnC& b);

/// Generalized rank R and generalized degree Deg of a coherent sheaf on C_n.
struct Invariants {
  Int rank = 0;
  Int degree = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Validated constructor: rank must be non-negative.
Invariants make_invariants(Int rank, Int degree);

Invariants operator+(const Invariants& a, const Invariants& b);
Invariants operator-(const Invariants& a, const Invariants& b);

/// Invariants of a bundle on C regarded as a sheaf on C_n (R = rank).
inline Invariants as_invariants(const BundleOnC& b) { return {b.rank, b.deg}; }

/// μ = Deg/R; throws ZeroRank when R = 0.
Rational slope(const Invariants& inv);

std::ostream& operator<<(std::ostream& os, const BundleOnC& b);
std::ostream& operator<<(std::ostream& os, const Invariants& inv);

}  // namespace mcurve
