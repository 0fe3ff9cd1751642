#include "mcurve/moduli.hpp"

#include <string>

namespace mcurve {

using checked::add;
using checked::exact_div;
using checked::mul;
using checked::sub;

namespace {

void require_rigid_shape(const CurveContext& ctx, Int a, Int k) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "moduli needs a >= 1");
  if (k < 1 || k >= ctx.n()) {
    throw Error(ErrorKind::InvalidArgument, "moduli needs 1 <= k < n");
  }
}

/// m(m−1)/2
Int pairs(Int m) { return exact_div(mul(m, sub(m, 1)), 2); }

}  // namespace

ModuliPoint::ModuliPoint(const CurveContext& ctx, Int a, Int k, Int epsilon,
                         Int delta)
    : ctx_(ctx), a_(a), k_(k), epsilon_(epsilon), delta_(delta) {
  require_rigid_shape(ctx_, a_, k_);
}

RigidSheaf ModuliPoint::rigid_sheaf() const {
  return RigidSheaf(ctx_, a_, k_, BundleOnC{add(a_, 1), epsilon_},
                    BundleOnC{a_, delta_});
}

Invariants moduli_rd(const ModuliPoint& p) {
  const Int n = p.context().n();
  const Int l = p.context().deg_l();
  const Int a = p.a();
  const Int k = p.k();
  // Split the halved coefficient per summand; each of n(n−1), k(k−1) is even.
  const Int degree_part =
      add(mul(k, p.epsilon()), mul(sub(n, k), p.delta()));
  const Int twist_part = add(mul(pairs(n), a, l), mul(pairs(k), l));
  return {add(mul(a, n), k), add(degree_part, twist_part)};
}

Int moduli_dim(const CurveContext& ctx, Int a, Int k) {
  require_rigid_shape(ctx, a, k);
  const Int n = ctx.n();
  const Int a_sq = mul(a, a);
  const Int coeff_l =
      add(mul(pairs(n), a_sq), mul(k, sub(n, 1), a), pairs(k));
  const Int coeff_g = add(mul(n, a_sq), mul(k, add(mul(2, a), 1)));
  return add(sub(1, mul(coeff_l, ctx.deg_l())),
             mul(sub(ctx.genus(), 1), coeff_g));
}

bool moduli_nonempty(const ModuliPoint& p) {
  if (p.context().genus() < 2) {
    throw Error(ErrorKind::GenusTooSmall,
                "non-emptiness criterion needs genus >= 2, got " +
                    std::to_string(p.context().genus()));
  }
  const Int n = p.context().n();
  const Int l = p.context().deg_l();
  const Rational lower(p.epsilon(), add(p.a(), 1));
  const Rational middle(p.delta(), p.a());
  const Rational upper(sub(p.epsilon(), mul(sub(n, p.k()), l)), add(p.a(), 1));
  return lower < middle && middle < upper;
}

Invariants vb_moduli_rd(const CurveContext& ctx, Int r, Int delta) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "rank r must be >= 1");
  const Int n = ctx.n();
  return {mul(n, r), add(mul(n, delta), mul(pairs(n), r, ctx.deg_l()))};
}

Int ext_dim_rr(Int genus, const BundleOnC& source, const BundleOnC& target,
               Int hom_dim) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be >= 0");
  if (source.rank < 1 || target.rank < 1) {
    throw Error(ErrorKind::InvalidArgument, "ranks must be >= 1");
  }
  if (hom_dim < 0) throw Error(ErrorKind::InvalidArgument, "hom_dim must be >= 0");
  // χ(source^* ⊗ target) = deg + rank·(1 − g).
  const Int euler = add(sub(mul(source.rank, target.deg),
                            mul(target.rank, source.deg)),
                        mul(source.rank, target.rank, sub(1, genus)));
  const Int ext = sub(hom_dim, euler);
  if (ext < 0) {
    throw Error(ErrorKind::InconsistentInput,
                "negative Ext^1 dimension " + std::to_string(ext) +
                    "; hom_dim is too small");
  }
  return ext;
}

std::vector<RegionRow> scan(const CurveContext& ctx, Int a, Int k,
                            IntRange delta_range, IntRange epsilon_range,
                            std::uint64_t cap) {
  require_rigid_shape(ctx, a, k);
  if (delta_range.lo > delta_range.hi || epsilon_range.lo > epsilon_range.hi) {
    throw Error(ErrorKind::InvalidArgument, "scan ranges must be non-empty");
  }
  const auto width = [](IntRange r) {
    return static_cast<unsigned __int128>(
               static_cast<__int128>(r.hi) - static_cast<__int128>(r.lo)) + 1;
  };
  const unsigned __int128 cells = width(delta_range) * width(epsilon_range);
  if (cells > cap) {
    throw Error(ErrorKind::BudgetExceeded,
                "scan grid exceeds cap " + std::to_string(cap));
  }
  const Int dim = moduli_dim(ctx, a, k);
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(cells));
  for (Int eps = epsilon_range.lo;; ++eps) {
    for (Int delta = delta_range.lo;; ++delta) {
      const ModuliPoint p(ctx, a, k, eps, delta);
      const Invariants rd = moduli_rd(p);
      rows.push_back({delta, eps, rd.rank, rd.degree, moduli_nonempty(p), dim});
      if (delta == delta_range.hi) break;
    }
    if (eps == epsilon_range.hi) break;
  }
  return rows;
}

}  // namespace mcurve
