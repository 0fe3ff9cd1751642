#pragma once

#include <cstdint>
#include <vector>

#include "mcurve/sheaf.hpp"

namespace mcurve {

/// Parameters (a, k, δ = deg F, ε = deg E) of the locus N(a, k, δ, ε) of
/// stable rigid-type sheaves locally isomorphic to a·O_n ⊕ O_k.
class ModuliPoint {
 public:
  ModuliPoint(const CurveContext& ctx, Int a, Int k, Int epsilon, Int delta);

  const CurveContext& context() const noexcept { return ctx_; }
  Int a() const noexcept { return a_; }
  Int k() const noexcept { return k_; }
  Int epsilon() const noexcept { return epsilon_; }
  Int delta() const noexcept { return delta_; }

  /// The rigid sheaf with E = (a+1, ε) and F = (a, δ).
  RigidSheaf rigid_sheaf() const;

 private:
  CurveContext ctx_;
  Int a_;
  Int k_;
  Int epsilon_;
  Int delta_;
};

/// (R, d) of M(R, d) containing N(a, k, δ, ε):
/// R = an + k, d = kε + (n−k)δ + (n(n−1)a + k(k−1))·deg(L)/2.
Invariants moduli_rd(const ModuliPoint& p);

/// dim N(a, k, δ, ε) = 1 − (n(n−1)/2·a² + k(n−1)a + k(k−1)/2)·deg(L)
///                     + (g−1)(n·a² + k(2a+1)).
Int moduli_dim(const CurveContext& ctx, Int a, Int k);

/**
 * Sufficient criterion for N(a, k, δ, ε) to be non-empty:
 *   ε/(a+1) < δ/a < (ε − (n−k)·deg(L))/(a+1).
 *
 * The existence argument relies on stable bundles with prescribed invariants
 * on C, which is only asserted for genus >= 2; smaller genus throws
 * GenusTooSmall. A false result means the criterion fails, not that the
 * locus is empty.
 */
bool moduli_nonempty(const ModuliPoint& p);

/// (R, d) of U(R, d), the stable vector bundles with restriction of rank r
/// and degree δ: (nr, nδ + n(n−1)/2·r·deg(L)). U(R, d) is non-empty, smooth
/// and irreducible; only the invariants are computed here.
Invariants vb_moduli_rd(const CurveContext& ctx, Int r, Int delta);

/// dim Ext¹(source, target) on C by Riemann–Roch:
/// hom_dim − (r_s·d_t − r_t·d_s + r_s·r_t·(1−g)). A negative result means
/// hom_dim was wrong and throws InconsistentInput.
Int ext_dim_rr(Int genus, const BundleOnC& source, const BundleOnC& target,
               Int hom_dim);

struct IntRange {
  Int lo;
  Int hi;  ///< inclusive
};

struct RegionRow {
  Int delta;
  Int epsilon;
  Int R;
  Int d;
  bool nonempty;
  Int dim;

  friend bool operator==(const RegionRow&, const RegionRow&) = default;
};

inline constexpr std::uint64_t kDefaultScanCap = 1'000'000;

/// Tabulates moduli_rd, moduli_nonempty and moduli_dim over a (δ, ε) grid for
/// fixed (ctx, a, k). Rows come out ε-major, δ-minor, ascending.
std::vector<RegionRow> scan(const CurveContext& ctx, Int a, Int k,
                            IntRange delta_range, IntRange epsilon_range,
                            std::uint64_t cap = kDefaultScanCap);

}  // namespace mcurve
