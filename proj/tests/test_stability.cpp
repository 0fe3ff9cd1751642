#include <doctest.h>

#include <algorithm>

#include "mcurve/stability.hpp"
#include "oracles.hpp"

using namespace mcurve;

namespace {

using S = StabilityStatus;

Premise P(std::string_view subject, S status) {
  return Premise::declared(std::string(subject), status);
}

FiltrationSlice vb_slice() {
  return FiltrationSlice(CurveContext(2, 0, -2), {2, 0}, {1, -1}, 1, 0);
}

Certificate filtration(const FiltrationSlice& sl, S a, S b, S c, S d,
                       StablePolicy policy = StablePolicy::AllFour) {
  return theo1_certify(sl, P(subject::kBracket, a), P(subject::kBidual, b),
                       P(subject::kDualBracket, c), P(subject::kDualBidual, d), policy);
}

RigidSheaf rigid(Int n, Int a, Int k, Int eps, Int delta, Int l) {
  return RigidSheaf(CurveContext(n, 0, l), a, k, {a + 1, eps}, {a, delta});
}

Certificate rigid_cert(const RigidSheaf& s, S e, S f, S v) {
  return theo3_certify(s, P(subject::kE, e), P(subject::kF, f), P(subject::kV, v));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("status names round trip") {
  for (S s : {S::Unknown, S::Semistable, S::Stable}) {
    CHECK(parse_status(to_string(s)) == s);
  }
  CHECK(kind_of([] { (void)parse_status("unstable"); }) == ErrorKind::InvalidPremise);
}

TEST_CASE("rank-one bundles are stable") {
  const Premise p = bundle_premise(P(subject::kF, S::Unknown), {1, 7});
  CHECK(p.status == S::Stable);
  CHECK(p.origin == PremiseOrigin::RankOne);
  CHECK(bundle_premise(P(subject::kF, S::Unknown), {2, 7}).status == S::Unknown);
  const Premise bogus{std::string(subject::kF), S::Stable, PremiseOrigin::RankOne};
  CHECK(kind_of([&] { (void)bundle_premise(bogus, {3, 0}); }) == ErrorKind::InvalidPremise);
}

TEST_CASE("slope lemma instances") {
  const LemmaInstance strict({1, 0}, {1, 0}, {1, 1}, {1, 2});
  CHECK(strict.e() == Invariants{2, 1});
  CHECK(strict.e2() == Invariants{2, 2});
  const LemmaOutcome o = lemma_slopes(strict);
  CHECK(o.hypotheses_hold);
  CHECK(o.strict_hypothesis);
  CHECK(o.conclusion_holds);
  CHECK(o.strict_conclusion);

  const LemmaOutcome same = lemma_slopes(LemmaInstance({1, 0}, {1, 0}, {1, 1}, {1, 1}));
  CHECK(same.hypotheses_hold);
  CHECK_FALSE(same.strict_hypothesis);
  CHECK(same.conclusion_holds);
  CHECK_FALSE(same.strict_conclusion);

  CHECK_FALSE(lemma_slopes(LemmaInstance({1, 0}, {2, 0}, {1, 1}, {1, 1})).hypotheses_hold);
  CHECK(kind_of([] { LemmaInstance({0, 0}, {1, 0}, {1, 1}, {1, 1}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("slope lemma oracle") {
  const LemmaOracleReport small = lemma_oracle(2, 3);
  CHECK(small.counterexamples.empty());
  CHECK(small.enumerated == 2ull * 2 * 2 * 2 * 7 * 7 * 7 * 7);
  CHECK(small.hypotheses_held > 0);
  CHECK(small.strict_hypotheses_held <= small.hypotheses_held);
  CHECK(lemma_oracle(3, 4).counterexamples.empty());
  CHECK(kind_of([] { (void)lemma_oracle(0, 3); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)lemma_oracle(3, -1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)lemma_oracle(3, 4, 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("slope lemma oracle is deterministic") {
  const LemmaOracleReport a = lemma_oracle(2, 2);
  const LemmaOracleReport b = lemma_oracle(2, 2);
  CHECK(a.enumerated == b.enumerated);
  CHECK(a.hypotheses_held == b.hypotheses_held);
  CHECK(a.strict_hypotheses_held == b.strict_hypotheses_held);
}

TEST_CASE("filtration slope inequalities") {
  const FiltrationSlopeCheck x = eqX_check(vb_slice());
  CHECK(x.first);
  CHECK(x.second);
  CHECK(x.first_strict);
  CHECK(x.second_strict);
}

TEST_CASE("filtration slope inequalities: tie case") {
  // Search small slices for mu(e_up_k) == mu(total).
  bool found = false;
  for (Int deg = -6; deg <= 6 && !found; ++deg) {
    const FiltrationSlice sl(CurveContext(2, 0, -2), {2, 0}, {1, deg}, 1, 0);
    const SliceDerived d = slice_derived(sl);
    if (slope(d.e_up_k) == slope(sl.total())) {
      found = true;
      const FiltrationSlopeCheck x = eqX_check(sl);
      CHECK(x.first);
      CHECK_FALSE(x.first_strict);
      const Certificate c = filtration(sl, S::Stable, S::Stable, S::Stable, S::Stable);
      CHECK(c.conclusion == S::Semistable);
    }
  }
  CHECK(found);
}

TEST_CASE("filtration rule") {
  const FiltrationSlice sl = vb_slice();
  CHECK(filtration(sl, S::Stable, S::Stable, S::Stable, S::Stable).conclusion == S::Stable);
  CHECK(filtration(sl, S::Stable, S::Semistable, S::Stable, S::Stable).conclusion ==
        S::Semistable);
  CHECK(filtration(sl, S::Stable, S::Unknown, S::Stable, S::Stable).conclusion == S::Unknown);
  CHECK(filtration(sl, S::Stable, S::Semistable, S::Semistable, S::Stable,
                   StablePolicy::OnePerPair)
            .conclusion == S::Stable);
  CHECK(filtration(sl, S::Semistable, S::Semistable, S::Stable, S::Stable,
                   StablePolicy::OnePerPair)
            .conclusion == S::Semistable);
  const Certificate c = filtration(sl, S::Stable, S::Stable, S::Stable, S::Stable);
  CHECK(c.rule == Rule::Filtration);
  CHECK(c.premises.size() == 4);
  CHECK(std::all_of(c.checks.begin(), c.checks.end(),
                    [](const Check& k) { return k.holds && k.relation == Relation::Lt; }));
}

TEST_CASE("filtration rule flags a failing inequality") {
  // Search small slices for one whose second inequality fails.
  bool found = false;
  for (Int d_total = -6; d_total <= 6 && !found; ++d_total) {
    for (Int d_sub = -6; d_sub <= 6 && !found; ++d_sub) {
      const FiltrationSlice sl(CurveContext(2, 0, -1), {2, d_total}, {1, d_sub}, 1, 0);
      const FiltrationSlopeCheck x = eqX_check(sl);
      if (x.first && !x.second) {
        found = true;
        const Certificate c = filtration(sl, S::Stable, S::Stable, S::Stable, S::Stable);
        CHECK(c.conclusion == S::Unknown);
        CHECK(std::any_of(c.checks.begin(), c.checks.end(),
                          [](const Check& k) { return !k.holds; }));
      }
    }
  }
  CHECK(found);
}

TEST_CASE("filtration rule rejects wrong subjects") {
  const FiltrationSlice sl = vb_slice();
  CHECK(kind_of([&] {
          (void)theo1_certify(sl, P(subject::kBidual, S::Stable), P(subject::kBidual, S::Stable),
                              P(subject::kDualBracket, S::Stable),
                              P(subject::kDualBidual, S::Stable));
        }) == ErrorKind::InvalidPremise);
}

TEST_CASE("vector bundle rule") {
  const VectorBundleCn v(CurveContext(3, 0, -1), {2, 1});
  const Certificate c = theo2_certify(v, P(subject::kRestriction, S::Stable));
  CHECK(c.conclusion == S::Stable);
  REQUIRE(c.checks.size() == 2);
  CHECK(c.checks[0].right == Rational(1, 2));
  CHECK(c.checks[0].left == Rational(-1, 2));
  CHECK(c.checks[1].left == Rational(-3, 2));
  CHECK(theo2_certify(v, P(subject::kRestriction, S::Unknown)).conclusion == S::Unknown);
  CHECK(theo2_certify(v, P(subject::kRestriction, S::Semistable)).conclusion == S::Semistable);
  const VectorBundleCn line(CurveContext(4, 0, -2), {1, 3});
  const Certificate lc = theo2_certify(line, P(subject::kRestriction, S::Unknown));
  CHECK(lc.conclusion == S::Stable);
  CHECK(lc.premises[0].origin == PremiseOrigin::RankOne);
}

TEST_CASE("rigid band") {
  const RigidBandCheck b = equCC3_check(rigid(2, 1, 1, 0, 1, -3));
  CHECK(b.holds);
  CHECK(b.strict);
  CHECK(b.combined);
  CHECK(b.combined_strict);
  const RigidBandCheck far = equCC3_check(rigid(2, 1, 1, 0, 10, -3));
  CHECK_FALSE(far.holds);
  CHECK_FALSE(far.combined);
}

TEST_CASE("rigid rule") {
  const RigidSheaf s = rigid(2, 1, 1, 0, 1, -3);
  CHECK(rigid_cert(s, S::Stable, S::Stable, S::Stable).conclusion == S::Stable);
  CHECK(rigid_cert(rigid(2, 1, 1, 0, 10, -3), S::Stable, S::Stable, S::Stable).conclusion ==
        S::Unknown);
  CHECK(rigid_cert(s, S::Semistable, S::Stable, S::Semistable).conclusion == S::Semistable);
  CHECK(rigid_cert(s, S::Unknown, S::Stable, S::Stable).conclusion == S::Unknown);
}

TEST_CASE("rigid rule on the band boundary is semistable") {
  // Search a small grid for a non-strict band.
  bool found = false;
  for (Int eps = -6; eps <= 6 && !found; ++eps)
    for (Int delta = -6; delta <= 6 && !found; ++delta) {
      const RigidSheaf s = rigid(2, 1, 1, eps, delta, -2);
      const RigidBandCheck b = equCC3_check(s);
      if (b.holds && !b.strict) {
        found = true;
        CHECK(rigid_cert(s, S::Stable, S::Stable, S::Stable).conclusion == S::Semistable);
      }
    }
  CHECK(found);
}

TEST_CASE("rigid slice and the filtration route") {
  const RigidSheaf s = rigid(2, 1, 1, 0, 1, -3);
  const FiltrationSlice sl = rigid_slice(s);
  CHECK(sl.total() == rigid_invariants(s));
  CHECK(sl.sub() == Invariants{1, -2});
  CHECK(sl.k() == 1);
  CHECK(sl.torsion() == 0);
  const Certificate c = rigid_via_filtration(s, P(subject::kE, S::Stable),
                                             P(subject::kF, S::Stable), P(subject::kV, S::Stable));
  CHECK(c.conclusion == S::Stable);
  CHECK(std::all_of(c.premises.begin(), c.premises.end(), [](const Premise& p) {
    return p.origin == PremiseOrigin::Inferred;
  }));
}

TEST_CASE("point kernel rule") {
  const CurveContext ctx(2, 0, -3);
  auto cert = [&](Int z, S e, S phi) {
    return theo5_certify(ctx, {2, 0}, z, P(subject::kE, e), P(subject::kEphi, phi));
  };
  CHECK(cert(6, S::Semistable, S::Semistable).conclusion == S::Semistable);
  CHECK(cert(6, S::Stable, S::Stable).conclusion == S::Semistable);
  CHECK(cert(5, S::Stable, S::Stable).conclusion == S::Stable);
  CHECK(cert(7, S::Stable, S::Stable).conclusion == S::Unknown);
  const Certificate empty = cert(0, S::Stable, S::Stable);
  const Certificate vb = theo2_certify(VectorBundleCn(ctx, {2, 0}),
                                       P(subject::kRestriction, S::Stable));
  CHECK(empty.conclusion == vb.conclusion);
  CHECK(kind_of([&] { (void)cert(-1, S::Stable, S::Stable); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("ideal of a point") {
  CHECK(ideal_point_slope(CurveContext(2, 0, -1)) == Rational(-1));
  for (Int l = -6; l <= -1; ++l) {
    CHECK(ideal_point_slope(CurveContext(2, 0, l)) == Rational(l - 1, 2));
  }
  CHECK(kind_of([] { (void)ideal_point_slope(CurveContext(3, 0, -1)); }) ==
        ErrorKind::WrongMultiplicity);
}

TEST_CASE("rank-two example on the double curve") {
  const HnExample h = hn_analysis(CurveContext(2, 0, -2), 2);
  CHECK(h.mu_sub == Rational(1, 2));
  CHECK(h.mu_total == Rational(-1, 2));
  CHECK(h.destabilizes);
  CHECK(h.delta_restriction == 1);
  CHECK_FALSE(h.semistable_boundary);
  for (Int l : {-1, -2}) {
    const HnExample b = hn_analysis(CurveContext(2, 0, l), 0);
    CHECK(b.mu_sub == b.mu_total);
    CHECK(b.semistable_boundary);
    CHECK_FALSE(b.destabilizes);
  }
}

TEST_CASE("rigid band agrees with the moduli band oracle") {
  for (Int eps = -6; eps <= 6; ++eps)
    for (Int delta = -6; delta <= 6; ++delta) {
      if (!oracle::moduli_band(3, 2, 1, eps, delta, -2)) continue;
      CHECK(equCC3_check(rigid(3, 2, 1, eps, delta, -2)).strict);
    }
}
