#include "mcurve/stability.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace mcurve {

using checked::add;
using checked::mul;
using checked::sub;

std::string_view to_string(StabilityStatus s) noexcept {
  switch (s) {
    case StabilityStatus::Unknown: return "unknown";
    case StabilityStatus::Semistable: return "semistable";
    case StabilityStatus::Stable: return "stable";
  }
  return "unknown";
}

StabilityStatus parse_status(std::string_view text) {
  if (text == "stable") return StabilityStatus::Stable;
  if (text == "semistable") return StabilityStatus::Semistable;
  if (text == "unknown") return StabilityStatus::Unknown;
  throw Error(ErrorKind::InvalidPremise,
              "unknown stability status '" + std::string(text) +
                  "' (expected stable, semistable or unknown)");
}

std::string_view to_string(PremiseOrigin o) noexcept {
  switch (o) {
    case PremiseOrigin::Declared: return "declared";
    case PremiseOrigin::RankOne: return "rank-one";
    case PremiseOrigin::Inferred: return "inferred";
  }
  return "declared";
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
  }
  return "?";
}

std::string_view to_string(Rule r) noexcept {
  switch (r) {
    case Rule::Filtration: return "filtration";
    case Rule::VectorBundle: return "vector-bundle";
    case Rule::RigidType: return "rigid-type";
    case Rule::PointKernel: return "point-kernel";
  }
  return "?";
}

Check make_check(std::string description, const Rational& left, Relation rel,
                 const Rational& right) {
  bool holds = false;
  switch (rel) {
    case Relation::Le: holds = left <= right; break;
    case Relation::Lt: holds = left < right; break;
    case Relation::Eq: holds = left == right; break;
  }
  return {std::move(description), left, rel, right, holds};
}

namespace {

void expect_subject(const Premise& p, std::string_view expected) {
  if (p.subject != expected) {
    throw Error(ErrorKind::InvalidPremise,
                "premise addresses '" + p.subject + "', expected '" +
                    std::string(expected) + "'");
  }
}

void reject_rank_one(const Premise& p) {
  if (p.origin == PremiseOrigin::RankOne) {
    throw Error(ErrorKind::InvalidPremise,
                "rank-one origin is only valid for line bundles on C ('" +
                    p.subject + "')");
  }
}

StabilityStatus weakest(std::initializer_list<StabilityStatus> list) {
  return std::min(list);
}

}  // namespace

Premise bundle_premise(Premise p, const BundleOnC& bundle) {
  if (bundle.rank == 1) {
    p.status = StabilityStatus::Stable;
    p.origin = PremiseOrigin::RankOne;
  } else if (p.origin == PremiseOrigin::RankOne) {
    reject_rank_one(p);
  }
  return p;
}

// ---------------------------------------------------------------------------

LemmaInstance::LemmaInstance(Invariants a, Invariants a2, Invariants b,
                             Invariants b2)
    : a_(a), a2_(a2), b_(b), b2_(b2), e_(a + b), e2_(a2 + b2) {
  for (const Invariants* inv : {&a_, &a2_, &b_, &b2_}) {
    if (inv->rank <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "slope lemma instances need positive ranks");
    }
  }
}

LemmaOutcome lemma_slopes(const LemmaInstance& inst) {
  const Rational mu_a = slope(inst.a());
  const Rational mu_b = slope(inst.b());
  const Rational mu_a2 = slope(inst.a2());
  const Rational mu_b2 = slope(inst.b2());
  const Rational ratio_e(inst.e2().rank, inst.e().rank);
  const Rational ratio_a(inst.a2().rank, inst.a().rank);

  LemmaOutcome out;
  out.hypotheses_hold =
      mu_b >= mu_a && mu_a2 >= mu_a && mu_b2 >= mu_b && ratio_e >= ratio_a;
  out.strict_hypothesis =
      out.hypotheses_hold && (mu_a2 > mu_a || mu_b2 > mu_b);
  const Rational mu_e = slope(inst.e());
  const Rational mu_e2 = slope(inst.e2());
  out.conclusion_holds = mu_e2 >= mu_e;
  out.strict_conclusion = mu_e2 > mu_e;
  return out;
}

LemmaOracleReport lemma_oracle(Int rank_max, Int deg_max, std::uint64_t cap) {
  if (rank_max < 1 || rank_max > 4) {
    throw Error(ErrorKind::InvalidArgument, "rank_max must lie in [1, 4]");
  }
  if (deg_max < 0 || deg_max > 6) {
    throw Error(ErrorKind::InvalidArgument, "deg_max must lie in [0, 6]");
  }
  std::vector<Invariants> choices;
  for (Int r = 1; r <= rank_max; ++r) {
    for (Int d = -deg_max; d <= deg_max; ++d) choices.push_back({r, d});
  }
  const std::uint64_t per = choices.size();
  const std::uint64_t total = per * per * per * per;
  if (total > cap) {
    throw Error(ErrorKind::BudgetExceeded,
                "enumeration of " + std::to_string(total) +
                    " instances exceeds cap " + std::to_string(cap));
  }

  // Each chunk owns a contiguous range of choices for A.
  auto run_chunk = [&choices](std::size_t begin, std::size_t end) {
    LemmaOracleReport part;
    for (std::size_t ia = begin; ia < end; ++ia) {
      for (const Invariants& a2 : choices) {
        for (const Invariants& b : choices) {
          for (const Invariants& b2 : choices) {
            const LemmaInstance inst(choices[ia], a2, b, b2);
            const LemmaOutcome o = lemma_slopes(inst);
            ++part.enumerated;
            if (o.hypotheses_hold) ++part.hypotheses_held;
            if (o.strict_hypothesis) ++part.strict_hypotheses_held;
            if ((o.hypotheses_hold && !o.conclusion_holds) ||
                (o.strict_hypothesis && !o.strict_conclusion)) {
              part.counterexamples.push_back(inst);
            }
          }
        }
      }
    }
    return part;
  };

  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, choices.size());
  const std::size_t step = (choices.size() + workers - 1) / workers;
  std::vector<std::future<LemmaOracleReport>> parts;
  for (std::size_t begin = 0; begin < choices.size(); begin += step) {
    const std::size_t end = std::min(choices.size(), begin + step);
    parts.push_back(std::async(std::launch::async, run_chunk, begin, end));
  }

  LemmaOracleReport report;
  for (auto& f : parts) {
    LemmaOracleReport part = f.get();
    report.enumerated += part.enumerated;
    report.hypotheses_held += part.hypotheses_held;
    report.strict_hypotheses_held += part.strict_hypotheses_held;
    report.counterexamples.insert(report.counterexamples.end(),
                                  part.counterexamples.begin(),
                                  part.counterexamples.end());
  }
  return report;
}

// ---------------------------------------------------------------------------

FiltrationSlopeCheck eqX_check(const FiltrationSlice& sl) {
  const SliceDerived d = slice_derived(sl);
  const Rational mu_up = slope(d.e_up_k);
  const Rational mu_total = slope(sl.total());
  const Rational mu_dual_up = slope(d.dual_up_k);
  const Rational mu_dual = slope(d.dual_total);
  return {mu_up <= mu_total, mu_dual_up <= mu_dual, mu_up < mu_total,
          mu_dual_up < mu_dual};
}

Certificate theo1_certify(const FiltrationSlice& sl, const Premise& p_bracket,
                          const Premise& p_bidual,
                          const Premise& p_dual_bracket,
                          const Premise& p_dual_bidual, StablePolicy policy) {
  expect_subject(p_bracket, subject::kBracket);
  expect_subject(p_bidual, subject::kBidual);
  expect_subject(p_dual_bracket, subject::kDualBracket);
  expect_subject(p_dual_bidual, subject::kDualBidual);
  for (const Premise* p : {&p_bracket, &p_bidual, &p_dual_bracket, &p_dual_bidual}) {
    reject_rank_one(*p);
  }

  const SliceDerived d = slice_derived(sl);
  const FiltrationSlopeCheck x = eqX_check(sl);

  using S = StabilityStatus;
  const S floor = weakest({p_bracket.status, p_bidual.status,
                           p_dual_bracket.status, p_dual_bidual.status});
  bool stable_premises = floor == S::Stable;
  if (policy == StablePolicy::OnePerPair) {
    stable_premises =
        floor >= S::Semistable &&
        (p_bracket.status == S::Stable || p_bidual.status == S::Stable) &&
        (p_dual_bracket.status == S::Stable ||
         p_dual_bidual.status == S::Stable);
  }

  Certificate cert;
  cert.rule = Rule::Filtration;
  cert.premises = {p_bracket, p_bidual, p_dual_bracket, p_dual_bidual};

  const bool stable = x.first_strict && x.second_strict && stable_premises;
  const Relation rel = stable ? Relation::Lt : Relation::Le;
  cert.checks.push_back(make_check("mu(E^(k)) vs mu(E)", slope(d.e_up_k), rel,
                                   slope(sl.total())));
  cert.checks.push_back(make_check("mu((E^v)^(k)) vs mu(E^v)",
                                   slope(d.dual_up_k), rel,
                                   slope(d.dual_total)));
  if (stable) {
    cert.conclusion = S::Stable;
  } else if (x.first && x.second && floor >= S::Semistable) {
    cert.conclusion = S::Semistable;
  }
  return cert;
}

// ---------------------------------------------------------------------------

Certificate theo2_certify(const VectorBundleCn& v, const Premise& p_restriction) {
  expect_subject(p_restriction, subject::kRestriction);
  Certificate cert;
  cert.rule = Rule::VectorBundle;
  cert.premises = {bundle_premise(p_restriction, v.restriction())};
  cert.conclusion = cert.premises.front().status;

  // Graded slopes μ(E⊗L^i) = μ(E) + i·deg(L) decrease strictly since deg(L) < 0.
  const std::vector<BundleOnC> graded = vb_graded(v);
  for (std::size_t i = 0; i + 1 < graded.size(); ++i) {
    cert.checks.push_back(make_check(
        "mu(E(x)L^" + std::to_string(i + 1) + ") vs mu(E(x)L^" +
            std::to_string(i) + ")",
        bundle_slope(graded[i + 1]), Relation::Lt, bundle_slope(graded[i])));
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

struct RigidSlopes {
  Rational mu_e;
  Rational mu_f;
  Rational mu_v;
  Rational half_nl;  ///< n·deg(L)/2
};

RigidSlopes rigid_slopes(const RigidSheaf& s) {
  const Int n = s.context().n();
  const Int l = s.context().deg_l();
  return {bundle_slope(s.e()), bundle_slope(s.f()), bundle_slope(rigid_V(s)),
          Rational(mul(n, l), 2)};
}

}  // namespace

RigidBandCheck equCC3_check(const RigidSheaf& s) {
  const RigidSlopes m = rigid_slopes(s);
  const Rational lower = m.mu_v + m.half_nl;
  const Rational upper = m.mu_e - m.half_nl;
  const Rational combined_upper =
      m.mu_e - Rational(mul(sub(s.context().n(), s.k()), s.context().deg_l()),
                        add(s.a(), 1));
  RigidBandCheck out;
  out.holds = lower <= m.mu_f && m.mu_f <= upper;
  out.strict = lower < m.mu_f && m.mu_f < upper;
  out.combined = m.mu_e <= m.mu_f && m.mu_f <= combined_upper;
  out.combined_strict = m.mu_e < m.mu_f && m.mu_f < combined_upper;
  return out;
}

Certificate theo3_certify(const RigidSheaf& s, const Premise& p_e,
                          const Premise& p_f, const Premise& p_v) {
  expect_subject(p_e, subject::kE);
  expect_subject(p_f, subject::kF);
  expect_subject(p_v, subject::kV);

  Certificate cert;
  cert.rule = Rule::RigidType;
  cert.premises = {bundle_premise(p_e, s.e()), bundle_premise(p_f, s.f()),
                   bundle_premise(p_v, rigid_V(s))};

  using S = StabilityStatus;
  const S floor = weakest({cert.premises[0].status, cert.premises[1].status,
                           cert.premises[2].status});
  const RigidBandCheck band = equCC3_check(s);
  const bool stable = band.strict && floor == S::Stable;

  const RigidSlopes m = rigid_slopes(s);
  const Relation rel = stable ? Relation::Lt : Relation::Le;
  cert.checks.push_back(
      make_check("mu(V) + n*degL/2 vs mu(F)", m.mu_v + m.half_nl, rel, m.mu_f));
  cert.checks.push_back(
      make_check("mu(F) vs mu(E) - n*degL/2", m.mu_f, rel, m.mu_e - m.half_nl));

  if (stable) {
    cert.conclusion = S::Stable;
  } else if (band.holds && floor >= S::Semistable) {
    cert.conclusion = S::Semistable;
  }
  return cert;
}

FiltrationSlice rigid_slice(const RigidSheaf& s) {
  const CurveContext& ctx = s.context();
  const Int l = ctx.deg_l();
  const Invariants sub_inv =
      tower_invariants(sub(ctx.n(), s.k()), twist(s.f(), s.k(), l), l);
  return FiltrationSlice(ctx, rigid_invariants(s), sub_inv, s.k(), 0);
}

Certificate rigid_via_filtration(const RigidSheaf& s, const Premise& p_e,
                                 const Premise& p_f, const Premise& p_v) {
  expect_subject(p_e, subject::kE);
  expect_subject(p_f, subject::kF);
  expect_subject(p_v, subject::kV);
  const Premise e = bundle_premise(p_e, s.e());
  const Premise f = bundle_premise(p_f, s.f());
  const Premise v = bundle_premise(p_v, rigid_V(s));

  // Vector bundles on C_m inherit the status of their restriction to C;
  // twisting and dualizing on C preserve (semi)stability.
  auto inferred = [](std::string_view label, const Premise& from) {
    return Premise{std::string(label), from.status, PremiseOrigin::Inferred};
  };
  return theo1_certify(rigid_slice(s), inferred(subject::kBracket, f),
                       inferred(subject::kBidual, e),
                       inferred(subject::kDualBracket, f),
                       inferred(subject::kDualBidual, v));
}

// ---------------------------------------------------------------------------

Certificate theo5_certify(const CurveContext& ctx, const BundleOnC& restriction,
                          Int z, const Premise& p_e, const Premise& p_ephi) {
  expect_subject(p_e, subject::kE);
  expect_subject(p_ephi, subject::kEphi);
  if (z < 0) {
    throw Error(ErrorKind::InvalidArgument, "z = h0(O_Z) must be >= 0");
  }
  const VectorBundleCn bundle(ctx, restriction);
  const BundleOnC e_phi{restriction.rank, sub(restriction.deg, z)};

  Certificate cert;
  cert.rule = Rule::PointKernel;
  cert.premises = {bundle_premise(p_e, restriction),
                   bundle_premise(p_ephi, e_phi)};

  using S = StabilityStatus;
  const S floor = weakest({cert.premises[0].status, cert.premises[1].status});
  const Int bound = checked::neg(mul(restriction.rank, ctx.deg_l()));
  const bool stable = z < bound && floor == S::Stable;

  cert.checks.push_back(make_check("z vs -rk(E)*degL", z,
                                   stable ? Relation::Lt : Relation::Le, bound));

  // 0 → 𝓔_φ → 𝔼 → O_Z → 0 fixes the invariants of the kernel.
  const Invariants whole = vb_invariants(bundle);
  const Invariants kernel{whole.rank, sub(whole.degree, z)};
  const ExactSeqWitness seq({kernel, whole, Invariants{0, z}});
  cert.checks.push_back(make_check("R(E_phi) vs n*rk(E)", kernel.rank,
                                   Relation::Eq, whole.rank));
  cert.checks.push_back(make_check("Deg(E_phi) + z vs Deg(EE)",
                                   add(kernel.degree, z), Relation::Eq,
                                   whole.degree));
  if (!additivity_check(seq)) {
    throw Error(ErrorKind::InconsistentInput, "kernel invariants not additive");
  }

  if (stable) {
    cert.conclusion = S::Stable;
  } else if (z <= bound && floor >= S::Semistable) {
    cert.conclusion = S::Semistable;
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

Invariants ideal_point_invariants(const CurveContext& ctx) {
  // 0 → I_P → O_2 → O_P → 0, with O_P of rank 0 and degree 1.
  const Invariants structure_sheaf =
      tower_invariants(2, BundleOnC{1, 0}, ctx.deg_l());
  return structure_sheaf - Invariants{0, 1};
}

void require_double(const CurveContext& ctx) {
  if (ctx.n() != 2) {
    throw Error(ErrorKind::WrongMultiplicity,
                "this example lives on a double curve (n = 2), got n = " +
                    std::to_string(ctx.n()));
  }
}

}  // namespace

Rational ideal_point_slope(const CurveContext& ctx) {
  require_double(ctx);
  return slope(ideal_point_invariants(ctx));
}

HnExample hn_analysis(const CurveContext& ctx, Int d_d) {
  require_double(ctx);
  const Invariants ideal = ideal_point_invariants(ctx);
  const Invariants sub_inv{ideal.rank,
                           add(ideal.degree, mul(ideal.rank, d_d))};
  const Invariants total = sub_inv + ideal;
  // Deg(𝔼) = 2·deg(𝔼|C) + 2·deg(L) for a rank-2 bundle on C_2.
  const Int delta = checked::exact_div(
      sub(total.degree, mul(2, ctx.deg_l())), 2);

  HnExample out{slope(ideal), slope(sub_inv), slope(total), delta, false, false};
  out.destabilizes = out.mu_sub > out.mu_total;
  out.semistable_boundary = out.mu_sub == out.mu_total;
  return out;
}

}  // namespace mcurve
