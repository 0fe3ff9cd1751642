#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcurve/duality.hpp"
#include "mcurve/sheaf.hpp"

namespace mcurve {

// Certificate inference. Every rule is a sufficient condition: a failed rule
// yields Unknown, never "unstable".

/// Ordered so that Stable > Semistable > Unknown.
enum class StabilityStatus { Unknown = 0, Semistable = 1, Stable = 2 };

std::string_view to_string(StabilityStatus s) noexcept;
StabilityStatus parse_status(std::string_view text);

/// Where a premise's status came from.
enum class PremiseOrigin { Declared, RankOne, Inferred };

std::string_view to_string(PremiseOrigin o) noexcept;

struct Premise {
  std::string subject;
  StabilityStatus status = StabilityStatus::Unknown;
  PremiseOrigin origin = PremiseOrigin::Declared;

  static Premise declared(std::string subject, StabilityStatus status) {
    return {std::move(subject), status, PremiseOrigin::Declared};
  }

  friend bool operator==(const Premise&, const Premise&) = default;
};

enum class Relation { Le, Lt, Eq };

std::string_view to_string(Relation r) noexcept;

/// One evaluated inequality: `left relation right`.
struct Check {
  std::string description;
  Rational left;
  Relation relation = Relation::Le;
  Rational right;
  bool holds = false;

  friend bool operator==(const Check&, const Check&) = default;
};

Check make_check(std::string description, const Rational& left, Relation rel,
                 const Rational& right);

enum class Rule { Filtration, VectorBundle, RigidType, PointKernel };

std::string_view to_string(Rule r) noexcept;

struct Certificate {
  StabilityStatus conclusion = StabilityStatus::Unknown;
  Rule rule = Rule::Filtration;
  std::vector<Premise> premises;
  std::vector<Check> checks;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Premise subject labels accepted by each rule.
namespace subject {
inline constexpr std::string_view kBracket = "bracket";          // 𝓔[k]
inline constexpr std::string_view kBidual = "bidual";            // (𝓔|C_k)^∨∨
inline constexpr std::string_view kDualBracket = "dual-bracket";  // (𝓔^∨)[k]
inline constexpr std::string_view kDualBidual = "dual-bidual";    // ((𝓔^∨)|C_k)^∨∨
inline constexpr std::string_view kRestriction = "restriction";  // 𝔼|C
inline constexpr std::string_view kE = "E";
inline constexpr std::string_view kF = "F";
inline constexpr std::string_view kV = "V";
inline constexpr std::string_view kEphi = "E_phi";
}  // namespace subject

/// Premise about a bundle on C. Rank-1 bundles are always stable, so a rank-1
/// subject is upgraded to Stable with origin RankOne whatever was declared.
Premise bundle_premise(Premise p, const BundleOnC& bundle);

// ---------------------------------------------------------------------------
// Slope lemma

/**
 * Six sheaves with positive ranks and E = A + B, E″ = A″ + B″ at the level of
 * (R, Deg). Built from the four free terms; the sums are derived.
 */
class LemmaInstance {
 public:
  LemmaInstance(Invariants a, Invariants a2, Invariants b, Invariants b2);

  const Invariants& a() const noexcept { return a_; }
  const Invariants& a2() const noexcept { return a2_; }
  const Invariants& b() const noexcept { return b_; }
  const Invariants& b2() const noexcept { return b2_; }
  const Invariants& e() const noexcept { return e_; }
  const Invariants& e2() const noexcept { return e2_; }

  friend bool operator==(const LemmaInstance&, const LemmaInstance&) = default;

 private:
  Invariants a_, a2_, b_, b2_, e_, e2_;
};

struct LemmaOutcome {
  bool hypotheses_hold = false;
  bool strict_hypothesis = false;
  bool conclusion_holds = false;
  bool strict_conclusion = false;
};

/// Hypotheses μ(B) ≥ μ(A), μ(A″) ≥ μ(A), μ(B″) ≥ μ(B),
/// R(E″)/R(E) ≥ R(A″)/R(A); conclusion μ(E″) ≥ μ(E), strict when μ(A″) > μ(A)
/// or μ(B″) > μ(B).
LemmaOutcome lemma_slopes(const LemmaInstance& inst);

struct LemmaOracleReport {
  std::uint64_t enumerated = 0;
  std::uint64_t hypotheses_held = 0;
  std::uint64_t strict_hypotheses_held = 0;
  std::vector<LemmaInstance> counterexamples;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

/// Exhaustive search over all instances with ranks in [1, rank_max] and
/// degrees in [−deg_max, deg_max] for A, A″, B, B″. Requires
/// 1 <= rank_max <= 4 and 0 <= deg_max <= 6. Work is split across threads;
/// counterexamples come back in enumeration order.
LemmaOracleReport lemma_oracle(Int rank_max, Int deg_max,
                               std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Filtration criterion

struct FiltrationSlopeCheck {
  bool first = false;          ///< μ(𝓔^{(k)}) ≤ μ(𝓔)
  bool second = false;         ///< μ((𝓔^∨)^{(k)}) ≤ μ(𝓔^∨)
  bool first_strict = false;
  bool second_strict = false;
};

FiltrationSlopeCheck eqX_check(const FiltrationSlice& sl);

/// How the stable case treats the four premises. Strict requires all four
/// Stable; Relaxed needs all four Semistable plus one Stable member of each
/// pair {𝓔[k], (𝓔|C_k)^∨∨} and {(𝓔^∨)[k], ((𝓔^∨)|C_k)^∨∨}.
enum class StablePolicy { AllFour, OnePerPair };

Certificate theo1_certify(const FiltrationSlice& sl, const Premise& p_bracket,
                          const Premise& p_bidual,
                          const Premise& p_dual_bracket,
                          const Premise& p_dual_bidual,
                          StablePolicy policy = StablePolicy::AllFour);

// ---------------------------------------------------------------------------
// Vector bundles

/// The conclusion equals the status of 𝔼|C.
Certificate theo2_certify(const VectorBundleCn& v, const Premise& p_restriction);

// ---------------------------------------------------------------------------
// Rigid type

struct RigidBandCheck {
  bool holds = false;            ///< μ(V) + n·l/2 ≤ μ(F) ≤ μ(E) − n·l/2
  bool strict = false;
  bool combined = false;         ///< μ(E) ≤ μ(F) ≤ μ(E) − (n−k)·l/(a+1)
  bool combined_strict = false;
};

RigidBandCheck equCC3_check(const RigidSheaf& s);

Certificate theo3_certify(const RigidSheaf& s, const Premise& p_e,
                          const Premise& p_f, const Premise& p_v);

/// The filtration slice at level k of a rigid sheaf: total = rigid_invariants,
/// sub = 𝓔_k, a rank-a bundle on C_{n−k} with restriction F⊗L^k; no torsion.
FiltrationSlice rigid_slice(const RigidSheaf& s);

/**
 * Second derivation of the rigid-type verdict: runs the filtration criterion
 * on rigid_slice(s) with premises inferred from E, F, V through the
 * vector-bundle rule (𝓔[k] and (𝓔^∨)[k] follow F, (𝓔|C_k)^∨∨ follows E,
 * ((𝓔^∨)|C_k)^∨∨ follows V).
 */
Certificate rigid_via_filtration(const RigidSheaf& s, const Premise& p_e,
                                 const Premise& p_f, const Premise& p_v);

// ---------------------------------------------------------------------------
// Kernel of a map onto a point sheaf

/// 𝓔_φ = ker(𝔼 → O_Z) with z = h⁰(O_Z): Semistable/Stable when
/// z ≤ −rank·deg(L) (resp. <) and E = 𝔼|C, E_φ are (semi)stable.
Certificate theo5_certify(const CurveContext& ctx, const BundleOnC& restriction,
                          Int z, const Premise& p_e, const Premise& p_ephi);

// ---------------------------------------------------------------------------
// Rank-2 bundles on a double curve built from an ideal of a point

/// μ(I_P) for the ideal sheaf of a closed point of C_2: (deg(L) − 1)/2.
Rational ideal_point_slope(const CurveContext& ctx);

struct HnExample {
  Rational mu_ideal;       ///< μ(I_P)
  Rational mu_sub;         ///< μ(I_P ⊗ 𝔻)
  Rational mu_total;       ///< μ(𝔼)
  Int delta_restriction;   ///< deg(𝔼|C)
  bool destabilizes;       ///< μ(I_P ⊗ 𝔻) > μ(𝔼)
  bool semistable_boundary;
};

/// Extension 0 → I_P⊗𝔻 → 𝔼 → I_P → 0 with deg(𝔻|C) = d_D; needs n = 2.
HnExample hn_analysis(const CurveContext& ctx, Int d_d);

}  // namespace mcurve
