#pragma once

#include "mcurve/sheaf.hpp"

namespace mcurve {

/**
 * Invariant data of a torsion-free sheaf 𝓔 on C_n at one level k of its
 * first canonical filtration.
 *
 *   total  : (R, Deg) of 𝓔
 *   sub    : (R, Deg) of 𝓔_k = ker(𝓔 → 𝓔|C_k)
 *   t_k    : h⁰(Σ_k(𝓔)), the length of the torsion of 𝓔|C_k
 *
 * Construction requires 1 <= k < n, 0 < R(𝓔_k) < R(𝓔) and t_k >= 0, so every
 * slope in the derived data is defined.
 */
class FiltrationSlice {
 public:
  FiltrationSlice(const CurveContext& ctx, Invariants total, Invariants sub,
                  Int k, Int t_k);

  const CurveContext& context() const noexcept { return ctx_; }
  const Invariants& total() const noexcept { return total_; }
  const Invariants& sub() const noexcept { return sub_; }
  Int k() const noexcept { return k_; }
  Int torsion() const noexcept { return t_; }

 private:
  CurveContext ctx_;
  Invariants total_;
  Invariants sub_;
  Int k_;
  Int t_;
};

/// Invariants of every sheaf attached to a FiltrationSlice.
struct SliceDerived {
  Invariants e_k_twist;                ///< 𝓔_k ⊗ Λ^{−k}
  Invariants e_up_k;                   ///< 𝓔^{(k)}
  Invariants restriction;              ///< 𝓔|C_k
  Invariants bracket;                  ///< 𝓔[k]
  Invariants bidual_restriction;       ///< (𝓔|C_k)^{∨∨}
  Invariants dual_total;               ///< 𝓔^∨
  Invariants dual_sub;                 ///< (𝓔^∨)_k
  Invariants dual_bracket;             ///< (𝓔^∨)[k]
  Invariants dual_up_k;                ///< (𝓔^∨)^{(k)} = (𝓔|C_k)^∨
  Invariants dual_bidual_restriction;  ///< ((𝓔^∨)|C_k)^{∨∨}

  friend bool operator==(const SliceDerived&, const SliceDerived&) = default;
};

/// Invariants of 𝓔^∨: (R, −Deg + R(n−1)·deg(L) + h⁰(T(𝓔))).
Invariants dual_invariants(const Invariants& inv, Int torsion_len,
                           const CurveContext& ctx);

/// Duality on torsion sheaves, modelled by graded lengths only: each length
/// is preserved, so this is the identity on TorsionLengths.
TorsionLengths dual_torsion(const TorsionLengths& t);

SliceDerived slice_derived(const FiltrationSlice& sl);

/// Both sides of the dual slope identity
///   μ((𝓔^∨)|C_k) − μ((𝓔^∨)_k)
///     = μ(𝓔_k⊗Λ^{−k}) − μ(𝓔^{(k)}) + t_k (1/R(𝓔^{(k)}) + 1/R(𝓔_k)).
struct DualSlopeSides {
  Rational lhs;
  Rational rhs;
};
DualSlopeSides dual_slope_sides(const FiltrationSlice& sl);

/// Exact equality of the two sides above; false means an arithmetic bug.
bool cor2_check(const FiltrationSlice& sl);

}  // namespace mcurve
