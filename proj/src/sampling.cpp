#include "mcurve/sampling.hpp"

namespace mcurve::sampling {

// mt19937_64 output is fully specified, uniform_int_distribution is not; plain
// rejection sampling keeps seeded runs identical across standard libraries.
Int uniform(Rng& rng, Int lo, Int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<Int>(draw % span);
}

CurveContext random_context(Rng& rng, const Ranges& r) {
  const Int n = uniform(rng, r.n_min, r.n_max);
  const Int g = uniform(rng, 0, r.g_max);
  const Int l = uniform(rng, r.l_min, r.l_max);
  return CurveContext(n, g, l);
}

Invariants random_invariants(Rng& rng, const Ranges& r) {
  return {uniform(rng, 0, r.rank_max), uniform(rng, -r.deg_abs, r.deg_abs)};
}

FiltrationSlice random_slice(Rng& rng, const Ranges& r) {
  const CurveContext ctx = random_context(rng, r);
  const Int total_rank = uniform(rng, 2, r.rank_max);
  const Int sub_rank = uniform(rng, 1, total_rank - 1);
  const Invariants total{total_rank, uniform(rng, -r.deg_abs, r.deg_abs)};
  const Invariants sub{sub_rank, uniform(rng, -r.deg_abs, r.deg_abs)};
  const Int k = uniform(rng, 1, ctx.n() - 1);
  const Int t = uniform(rng, 0, r.torsion_max);
  return FiltrationSlice(ctx, total, sub, k, t);
}

RigidSheaf random_rigid(Rng& rng, const Ranges& r) {
  const CurveContext ctx = random_context(rng, r);
  const Int a = uniform(rng, 1, r.a_max);
  const Int k = uniform(rng, 1, ctx.n() - 1);
  const BundleOnC e{a + 1, uniform(rng, -r.deg_abs, r.deg_abs)};
  const BundleOnC f{a, uniform(rng, -r.deg_abs, r.deg_abs)};
  return RigidSheaf(ctx, a, k, e, f);
}

}  // namespace mcurve::sampling
