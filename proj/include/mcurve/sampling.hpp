#pragma once

#include <cstdint>
#include <random>

#include "mcurve/duality.hpp"
#include "mcurve/sheaf.hpp"

// Seeded generators of valid random instances for randomized property checks.
// The ranges are desk scale on purpose: small enough that exact arithmetic
// never comes near the 64-bit limits.

namespace mcurve::sampling {

using Rng = std::mt19937_64;

struct Ranges {
  Int n_min = 2, n_max = 5;
  Int l_min = -4, l_max = -1;
  Int g_max = 4;
  Int rank_max = 12;
  Int deg_abs = 30;
  Int torsion_max = 6;
  Int a_max = 4;
};

Int uniform(Rng& rng, Int lo, Int hi);

CurveContext random_context(Rng& rng, const Ranges& r = {});
FiltrationSlice random_slice(Rng& rng, const Ranges& r = {});
RigidSheaf random_rigid(Rng& rng, const Ranges& r = {});
Invariants random_invariants(Rng& rng, const Ranges& r = {});

}  // namespace mcurve::sampling
