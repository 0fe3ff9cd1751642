#include "mcurve/sheaf.hpp"

#include <algorithm>
#include <string>

namespace mcurve {

using checked::add;
using checked::mul;
using checked::sub;

QlfType::QlfType(const CurveContext& ctx, std::vector<Int> m)
    : ctx_(ctx), m_(std::move(m)) {
  if (static_cast<Int>(m_.size()) != ctx_.n()) {
    throw Error(ErrorKind::InvalidArgument,
                "type must have n = " + std::to_string(ctx_.n()) +
                    " entries, got " + std::to_string(m_.size()));
  }
  if (std::any_of(m_.begin(), m_.end(), [](Int v) { return v < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "type entries must be >= 0");
  }
  if (std::all_of(m_.begin(), m_.end(), [](Int v) { return v == 0; })) {
    throw Error(ErrorKind::InvalidArgument, "type of the zero sheaf");
  }
}

Int qlf_rank(const QlfType& ty) {
  Int r = 0;
  for (Int i = 1; i <= ty.context().n(); ++i) {
    r = add(r, mul(i, ty.at_level(i)));
  }
  return r;
}

RigidClass classify_rigid(const QlfType& ty) {
  const Int n = ty.context().n();
  const Int a = ty.at_level(n);
  Int extra_level = 0;
  for (Int i = 1; i < n; ++i) {
    const Int m = ty.at_level(i);
    if (m == 0) continue;
    if (m != 1 || extra_level != 0) return NotRigid{};
    extra_level = i;
  }
  if (a == 0) return NotRigid{};  // O_k alone has no O_n summand
  if (extra_level == 0) return LocallyFree{a};
  return Rigid{a, extra_level};
}

RigidSheaf::RigidSheaf(const CurveContext& ctx, Int a, Int k, BundleOnC e,
                       BundleOnC f)
    : ctx_(ctx), a_(a), k_(k), e_(e), f_(f) {
  if (a_ < 1) {
    throw Error(ErrorKind::InvalidArgument, "rigid sheaf needs a >= 1");
  }
  if (k_ < 1 || k_ >= ctx_.n()) {
    throw Error(ErrorKind::InvalidArgument, "rigid sheaf needs 1 <= k < n");
  }
  if (e_.rank != add(a_, 1)) {
    throw Error(ErrorKind::InvalidArgument, "rank of E must be a+1");
  }
  if (f_.rank != a_) {
    throw Error(ErrorKind::InvalidArgument, "rank of F must be a");
  }
}

Invariants rigid_invariants(const RigidSheaf& s) {
  const Int n = s.context().n();
  const Int l = s.context().deg_l();
  const Int a = s.a();
  const Int k = s.k();
  // n(n-1) and k(k-1) are products of consecutive integers, hence even.
  const Int coeff = add(mul(n, sub(n, 1), a), mul(k, sub(k, 1)));
  const Int rank = add(mul(a, n), k);
  const Int deg = add(mul(k, s.e().deg), mul(sub(n, k), s.f().deg),
                      mul(checked::exact_div(coeff, 2), l));
  return {rank, deg};
}

BundleOnC rigid_V(const RigidSheaf& s) {
  const Int n = s.context().n();
  const Int l = s.context().deg_l();
  return {add(s.a(), 1), sub(s.e().deg, mul(sub(n, s.k()), l))};
}

std::vector<BundleOnC> first_graded(const RigidSheaf& s) {
  const Int n = s.context().n();
  const Int l = s.context().deg_l();
  std::vector<BundleOnC> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) {
    out.push_back(twist(i < s.k() ? s.e() : s.f(), i, l));
  }
  return out;
}

std::vector<BundleOnC> second_graded(const RigidSheaf& s) {
  const Int n = s.context().n();
  const Int l = s.context().deg_l();
  const BundleOnC v = rigid_V(s);
  std::vector<BundleOnC> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) {
    out.push_back(twist(i < n - s.k() ? s.f() : v, i, l));
  }
  return out;
}

ExactSeqWitness::ExactSeqWitness(std::vector<Invariants> terms)
    : terms_(std::move(terms)) {
  if (terms_.size() < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "exact sequence witness needs at least 3 terms");
  }
}

ExactSeqWitness star_sequence(const RigidSheaf& s) {
  const Int twist_power = s.context().n() - s.k();
  const Int l = s.context().deg_l();
  return ExactSeqWitness({
      as_invariants(twist(s.f(), twist_power, l)),
      as_invariants(twist(rigid_V(s), twist_power, l)),
      as_invariants(s.e()),
      as_invariants(s.f()),
  });
}

bool additivity_check(const ExactSeqWitness& w) {
  Int rank_sum = 0;
  Int deg_sum = 0;
  bool positive = true;
  for (const Invariants& t : w.terms()) {
    rank_sum = positive ? add(rank_sum, t.rank) : sub(rank_sum, t.rank);
    deg_sum = positive ? add(deg_sum, t.degree) : sub(deg_sum, t.degree);
    positive = !positive;
  }
  return rank_sum == 0 && deg_sum == 0;
}

VectorBundleCn::VectorBundleCn(const CurveContext& ctx, BundleOnC restriction)
    : ctx_(ctx), restriction_(restriction) {
  if (restriction_.rank < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "vector bundle restriction must have rank >= 1");
  }
}

Invariants tower_invariants(Int multiplicity, const BundleOnC& restriction,
                            Int deg_l) {
  if (multiplicity < 1) {
    throw Error(ErrorKind::InvalidArgument, "multiplicity must be >= 1");
  }
  const Int m = multiplicity;
  const Int pairs = checked::exact_div(mul(m, sub(m, 1)), 2);
  return {mul(m, restriction.rank),
          add(mul(m, restriction.deg), mul(pairs, restriction.rank, deg_l))};
}

Invariants vb_invariants(const VectorBundleCn& v) {
  return tower_invariants(v.context().n(), v.restriction(),
                          v.context().deg_l());
}

std::vector<BundleOnC> vb_graded(const VectorBundleCn& v) {
  std::vector<BundleOnC> out;
  for (Int i = 0; i < v.context().n(); ++i) {
    out.push_back(twist(v.restriction(), i, v.context().deg_l()));
  }
  return out;
}

TorsionLengths::TorsionLengths(const CurveContext& ctx, std::vector<Int> lengths)
    : ctx_(ctx), t_(std::move(lengths)) {
  if (static_cast<Int>(t_.size()) != ctx_.n()) {
    throw Error(ErrorKind::InvalidArgument,
                "torsion lengths need n = " + std::to_string(ctx_.n()) +
                    " entries");
  }
  if (std::any_of(t_.begin(), t_.end(), [](Int v) { return v < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "torsion lengths must be >= 0");
  }
}

Int TorsionLengths::total() const {
  Int sum = 0;
  for (Int v : t_) sum = add(sum, v);
  return sum;
}

}  // namespace mcurve
