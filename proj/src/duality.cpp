#include "mcurve/duality.hpp"

namespace mcurve {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

FiltrationSlice::FiltrationSlice(const CurveContext& ctx, Invariants total,
                                 Invariants sub_inv, Int k, Int t_k)
    : ctx_(ctx), total_(total), sub_(sub_inv), k_(k), t_(t_k) {
  if (k_ < 1 || k_ >= ctx_.n()) {
    throw Error(ErrorKind::InvalidSlice, "slice level must satisfy 1 <= k < n");
  }
  if (sub_.rank <= 0 || sub_.rank >= total_.rank) {
    throw Error(ErrorKind::InvalidSlice,
                "slice ranks must satisfy 0 < R(E_k) < R(E)");
  }
  if (t_ < 0) {
    throw Error(ErrorKind::InvalidSlice, "torsion length must be >= 0");
  }
}

Invariants dual_invariants(const Invariants& inv, Int torsion_len,
                           const CurveContext& ctx) {
  if (inv.rank < 0 || torsion_len < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "dual needs R >= 0 and torsion length >= 0");
  }
  const Int shift = mul(inv.rank, sub(ctx.n(), 1), ctx.deg_l());
  return {inv.rank, add(neg(inv.degree), shift, torsion_len)};
}

TorsionLengths dual_torsion(const TorsionLengths& t) { return t; }

SliceDerived slice_derived(const FiltrationSlice& sl) {
  const CurveContext& ctx = sl.context();
  const Int n = ctx.n();
  const Int l = ctx.deg_l();
  const Int k = sl.k();
  const Int t = sl.torsion();
  const Invariants& total = sl.total();
  const Invariants& sub_inv = sl.sub();
  const Int quotient_rank = sub(total.rank, sub_inv.rank);

  SliceDerived d;
  d.e_k_twist = {sub_inv.rank,
                 sub(sub_inv.degree, mul(k, l, sub_inv.rank))};
  d.e_up_k = {quotient_rank, sub(total.degree, d.e_k_twist.degree)};
  d.restriction = {quotient_rank, sub(total.degree, sub_inv.degree)};
  d.bracket = {sub_inv.rank, add(sub_inv.degree, t)};
  d.bidual_restriction = {quotient_rank,
                          sub(d.restriction.degree, t)};

  d.dual_total = dual_invariants(total, 0, ctx);
  d.dual_sub = {sub_inv.rank,
                sub(add(neg(sub_inv.degree),
                        mul(add(n, k, -1), sub_inv.rank, l)),
                    t)};
  // The torsion of (𝓔^∨)|C_k has the same length t as Σ_k(𝓔).
  d.dual_bracket = {sub_inv.rank, add(d.dual_sub.degree, t)};
  d.dual_up_k = dual_invariants(d.restriction, t, ctx);
  d.dual_bidual_restriction = {
      quotient_rank, sub(d.dual_total.degree, d.dual_bracket.degree)};
  return d;
}

DualSlopeSides dual_slope_sides(const FiltrationSlice& sl) {
  const SliceDerived d = slice_derived(sl);
  const Invariants dual_restriction = d.dual_total - d.dual_sub;
  const Rational lhs = slope(dual_restriction) - slope(d.dual_sub);
  const Rational torsion_term =
      Rational(sl.torsion()) *
      (Rational(1, d.e_up_k.rank) + Rational(1, sl.sub().rank));
  const Rational rhs = slope(d.e_k_twist) - slope(d.e_up_k) + torsion_term;
  return {lhs, rhs};
}

bool cor2_check(const FiltrationSlice& sl) {
  const DualSlopeSides s = dual_slope_sides(sl);
  return s.lhs == s.rhs;
}

}  // namespace mcurve
