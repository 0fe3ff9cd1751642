#include "mcurve/curve.hpp"

#include <ostream>
#include <string>

namespace mcurve {

CurveContext::CurveContext(Int multiplicity, Int genus, Int deg_l)
    : n_(multiplicity), g_(genus), l_(deg_l) {
  if (n_ < 2) {
    throw Error(ErrorKind::InvalidContext,
                "multiplicity must be at least 2, got " + std::to_string(n_));
  }
  if (g_ < 0) {
    throw Error(ErrorKind::InvalidContext,
                "genus must be non-negative, got " + std::to_string(g_));
  }
  if (l_ >= 0) {
    throw Error(ErrorKind::InvalidContext,
                "deg(L) must be negative, got " + std::to_string(l_));
  }
}

BundleOnC make_bundle(Int rank, Int deg) {
  if (rank < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "bundle rank must be non-negative, got " + std::to_string(rank));
  }
  return {rank, deg};
}

BundleOnC twist(const BundleOnC& b, Int i, Int l) {
  return {b.rank, checked::add(b.deg, checked::mul(b.rank, i, l))};
}

Rational bundle_slope(const BundleOnC& b) {
  return slope(as_invariants(b));
}

Invariants make_invariants(Int rank, Int degree) {
  if (rank < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "generalized rank must be non-negative, got " +
                    std::to_string(rank));
  }
  return {rank, degree};
}

Invariants operator+(const Invariants& a, const Invariants& b) {
  return {checked::add(a.rank, b.rank), checked::add(a.degree, b.degree)};
}

Invariants operator-(const Invariants& a, const Invariants& b) {
  return {checked::sub(a.rank, b.rank), checked::sub(a.degree, b.degree)};
}

Rational slope(const Invariants& inv) {
  if (inv.rank == 0) {
    throw Error(ErrorKind::ZeroRank, "slope undefined for generalized rank 0");
  }
  if (inv.rank < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative generalized rank");
  }
  return Rational(inv.degree, inv.rank);
}

std::ostream& operator<<(std::ostream& os, const BundleOnC& b) {
  return os << "(" << b.rank << ", " << b.deg << ")";
}

std::ostream& operator<<(std::ostream& os, const Invariants& inv) {
  return os << "(R=" << inv.rank << ", Deg=" << inv.degree << ")";
}

}  // namespace mcurve
