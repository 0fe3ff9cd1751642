#pragma once

#include <variant>
#include <vector>

#include "mcurve/curve.hpp"

namespace mcurve {

/**
 * Type (m_1, ..., m_n) of a quasi locally free sheaf: locally isomorphic to
 * the direct sum of m_i copies of O_{C_i}. Entries are non-negative, not all
 * zero, and there is exactly one per level of the filtration C_1 ⊂ ... ⊂ C_n.
 */
class QlfType {
 public:
  QlfType(const CurveContext& ctx, std::vector<Int> m);

  const CurveContext& context() const noexcept { return ctx_; }
  const std::vector<Int>& multiplicities() const noexcept { return m_; }
  /// m_i with the 1-based index used for O_{C_i}.
  Int at_level(Int i) const { return m_.at(static_cast<std::size_t>(i - 1)); }

 private:
  CurveContext ctx_;
  std::vector<Int> m_;
};

/// R(M) = Σ i·m_i.
Int qlf_rank(const QlfType& ty);

struct LocallyFree {
  Int a;
  friend bool operator==(const LocallyFree&, const LocallyFree&) = default;
};
struct Rigid {
  Int a;
  Int k;
  friend bool operator==(const Rigid&, const Rigid&) = default;
};
struct NotRigid {
  friend bool operator==(const NotRigid&, const NotRigid&) = default;
};
using RigidClass = std::variant<LocallyFree, Rigid, NotRigid>;

/// LocallyFree(a) for a·O_n, Rigid(a, k) for a·O_n ⊕ O_k, NotRigid otherwise.
RigidClass classify_rigid(const QlfType& ty);

/**
 * Quasi locally free sheaf of rigid type, locally a·O_n ⊕ O_k.
 *
 * Described by E = 𝓔|C (rank a+1) and F = G_k(𝓔) ⊗ L^{-k} (rank a). The
 * third bundle V is derived (see rigid_V), never stored.
 */
class RigidSheaf {
 public:
  RigidSheaf(const CurveContext& ctx, Int a, Int k, BundleOnC e, BundleOnC f);

  const CurveContext& context() const noexcept { return ctx_; }
  Int a() const noexcept { return a_; }
  Int k() const noexcept { return k_; }
  const BundleOnC& e() const noexcept { return e_; }
  const BundleOnC& f() const noexcept { return f_; }

 private:
  CurveContext ctx_;
  Int a_;
  Int k_;
  BundleOnC e_;
  BundleOnC f_;
};

/// R = a·n + k, Deg = k·deg E + (n−k)·deg F + (n(n−1)a + k(k−1))·deg(L)/2.
Invariants rigid_invariants(const RigidSheaf& s);

/// V = G^{(k)}(𝓔) ⊗ L^{k−n}: rank a+1, deg V = deg E − (n−k)·deg(L).
BundleOnC rigid_V(const RigidSheaf& s);

/// Graded pieces (G_0, ..., G_{n−1}) of the first canonical filtration:
/// (E, E⊗L, ..., E⊗L^{k−1}, F⊗L^k, ..., F⊗L^{n−1}).
std::vector<BundleOnC> first_graded(const RigidSheaf& s);

/// Graded pieces of the second canonical filtration in the order
/// (G^{(n)}, ..., G^{(1)}) = (F, ..., F⊗L^{n−k−1}, V⊗L^{n−k}, ..., V⊗L^{n−1}).
std::vector<BundleOnC> second_graded(const RigidSheaf& s);

/// A complex of sheaves asserted exact; only the invariants of each term are
/// recorded, in order. Needs at least three terms.
class ExactSeqWitness {
 public:
  explicit ExactSeqWitness(std::vector<Invariants> terms);
  const std::vector<Invariants>& terms() const noexcept { return terms_; }

 private:
  std::vector<Invariants> terms_;
};

/// The canonical sequence 0 → F⊗L^{n−k} → V⊗L^{n−k} → E → F → 0.
ExactSeqWitness star_sequence(const RigidSheaf& s);

/// True iff the alternating sums of R and of Deg over the terms both vanish.
bool additivity_check(const ExactSeqWitness& w);

/// Vector bundle 𝔼 on C_n, described by its restriction 𝔼|C.
class VectorBundleCn {
 public:
  VectorBundleCn(const CurveContext& ctx, BundleOnC restriction);

  const CurveContext& context() const noexcept { return ctx_; }
  const BundleOnC& restriction() const noexcept { return restriction_; }

 private:
  CurveContext ctx_;
  BundleOnC restriction_;
};

/// R = n·r, Deg = n·δ + n(n−1)/2 · r · deg(L).
Invariants vb_invariants(const VectorBundleCn& v);

/// Graded pieces (E, E⊗L, ..., E⊗L^{n−1}) of a vector bundle with E = 𝔼|C.
std::vector<BundleOnC> vb_graded(const VectorBundleCn& v);

/**
 * Invariants of a vector bundle on C_m with restriction E, for any m >= 1.
 *
 * Subsheaves of a sheaf on C_n live on smaller curves C_m (including
 * m = 1, the curve C itself), which CurveContext cannot represent.
 */
Invariants tower_invariants(Int multiplicity, const BundleOnC& restriction,
                            Int deg_l);

/// Graded lengths t_i = h⁰(G_i(T)), i = 0..n−1, of a torsion sheaf T.
class TorsionLengths {
 public:
  TorsionLengths(const CurveContext& ctx, std::vector<Int> lengths);

  const CurveContext& context() const noexcept { return ctx_; }
  const std::vector<Int>& lengths() const noexcept { return t_; }
  /// h⁰(T) = Σ t_i.
  Int total() const;

  friend bool operator==(const TorsionLengths&, const TorsionLengths&) = default;

 private:
  CurveContext ctx_;
  std::vector<Int> t_;
};

}  // namespace mcurve
