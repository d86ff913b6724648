#pragma once

#include "lefschetz/symplectic.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lefschetz {

/// H^k = ker d_k / im d_{k−1} with harmonic representatives: closed forms
/// orthogonal to the exact ones under the coefficient inner product.
class CohomologySpace {
public:
  CohomologySpace() = default;
  CohomologySpace(int dim, int degree, const Subspace &cycles, const Subspace &boundaries);

  int degree() const { return degree_; }
  std::size_t dim() const { return quotient_.dim(); }
  const Subspace &cycles() const { return quotient_.numerator(); }
  const Subspace &boundaries() const { return quotient_.denominator(); }
  const QuotientStructure &quotient() const { return quotient_; }

  const std::vector<Form> &representatives() const { return representatives_; }
  /// Coordinates of the class of a closed form. Throws NotSubspace if `a` is not closed.
  QVector class_of(const Form &a) const;
  QVector class_of(std::span<const Rational> coords) const { return quotient_.coordinates(coords); }
  Form representative(std::span<const Rational> class_coords) const;

private:
  int dim_ = 0;
  int degree_ = 0;
  QuotientStructure quotient_;
  std::vector<Form> representatives_;
};

/// Chevalley–Eilenberg cohomology in every degree 0..dim.
std::vector<CohomologySpace> de_rham_cohomology(const LieAlgebra &g);

/// H^{(r,s)}_ω: classes of closed forms in L^r(P∧^s), as a subspace of the
/// coordinate space of H^{2r+s}.
struct HrsGroup {
  int r = 0;
  int s = 0;
  Subspace classes;
  /// Closed forms in L^r P∧^s, one per basis class, chosen greedily from the
  /// canonical basis of the closed subspace.
  std::vector<Form> representatives;

  std::size_t dim() const { return classes.dim(); }
};

/// Σ_{2r+s=k} H^{(r,s)} compared with H^k.
struct DecompositionVerdict {
  int degree = 0;
  std::map<std::pair<int, int>, std::size_t> summand_dims; // (r, s) → dim
  std::size_t sum_dim = 0;
  std::size_t betti = 0;
  bool direct = false; // sum_dim = Σ summand dims
  bool full = false;   // sum_dim = b_k
  Subspace sum;
};

struct PrimitiveCohomologyDims {
  int degree = 0;
  /// (ker d ∩ ker d^Λ ∩ P) / (im dd^Λ ∩ P)
  std::size_t by_intersection = 0;
  /// (ker d ∩ P) / dd^Λ(P)
  std::size_t by_image = 0;
  bool agree() const { return by_intersection == by_image; }
};

struct HlcVerdict {
  std::vector<bool> per_k; // index k = 0..n: L^k : H^{n−k} → H^{n+k} bijective
  bool holds = false;
};

/// One check of a statement that is a theorem; `holds == false` is a bug.
struct TheoremCheck {
  std::string name;
  bool holds = false;
};

/// Every cohomological computation for a symplectic structure on a Lie
/// algebra. All spaces are computed eagerly; queries are pure.
class SymplecticCohomology {
public:
  explicit SymplecticCohomology(SymplecticStructure s);

  const SymplecticStructure &structure() const { return s_; }
  int dim() const { return s_.dim(); }
  int n() const { return s_.n(); }

  const CohomologySpace &de_rham(int k) const { return de_rham_.at(static_cast<std::size_t>(k)); }
  std::vector<std::size_t> betti() const;

  std::vector<std::size_t> dlambda_dims() const { return dlambda_dims_; }
  /// (ker d ∩ ker d^Λ) / im dd^Λ in degree k.
  const QuotientStructure &d_plus_dlambda(int k) const { return dpd_.at(static_cast<std::size_t>(k)); }
  std::vector<std::size_t> d_plus_dlambda_dims() const;
  std::vector<std::size_t> ddlambda_dims() const { return ddlambda_dims_; }

  PrimitiveCohomologyDims ph_plus(int s) const { return ph_plus_.at(static_cast<std::size_t>(s)); }
  /// (ker d ∩ ker d^Λ ∩ P∧^s) / d(P∧^{s−1} ∩ ker d^Λ)
  std::size_t ph_d(int s) const { return ph_d_.at(static_cast<std::size_t>(s)); }

  /// The zero group when 2r+s is outside 0..2n.
  const HrsGroup &hrs(int r, int s) const;
  const DecompositionVerdict &decomposition(int k) const { return verdicts_.at(static_cast<std::size_t>(k)); }

  /// Matrix of a form-level map ∧^source → ∧^target (commuting with d) on
  /// de Rham coordinates. Throws InternalInconsistency if it does not
  /// preserve closed or exact forms.
  QMatrix cohomology_map(const QMatrix &form_map, int source, int target) const;
  /// L^k : H^{n−k} → H^{n+k}
  QMatrix lefschetz_map(int k) const;
  /// L^r : H^s → H^{s+2r}
  QMatrix lefschetz_power_map(int r, int s) const;

  HlcVerdict hlc() const;
  /// The map H_{d+d^Λ} → H_dR is injective in every degree.
  bool dd_lemma() const;
  std::vector<bool> dd_lemma_per_degree() const;

  /// top(a ∧ b) on two classes given by coordinates.
  Rational cup_pairing(int k, std::span<const Rational> a, std::span<const Rational> b) const;
  /// Matrix of the cup pairing H^k × H^{2n−k} → Q in representative bases.
  QMatrix pairing_matrix(int k) const;
  /// top(d(∧^{2n−1})) = 0, which makes the cup pairing well defined on classes.
  bool pairing_well_defined() const;

  /// H^{(r,s)} = L^r H^{(0,s)} for each 2r+s ≤ n.
  std::vector<TheoremCheck> lr_equals_hr_check() const;
  /// H^{(k,0)} ∩ H^{(0,2k)} = {0} for 1 ≤ k ≤ ⌊n/2⌋.
  std::vector<TheoremCheck> pure_intersection_check() const;
  /// If Σ H^{(r,s)} = H^k then the degree 2n−k sum is direct.
  std::vector<TheoremCheck> duality_implication_check() const;

  /// L^k : H^{n−k}_{d+d^Λ} → H^{n+k}_{d+d^Λ} bijective for every k.
  bool d_plus_dlambda_hard_lefschetz() const;
  /// H^k_{d+d^Λ} = ⊕_r L^r PH^{k−2r}_{d+d^Λ} in every degree.
  bool d_plus_dlambda_primitive_decomposition() const;

private:
  SymplecticStructure s_;
  std::vector<CohomologySpace> de_rham_;
  std::vector<std::size_t> dlambda_dims_;
  std::vector<QuotientStructure> dpd_;
  std::vector<std::size_t> ddlambda_dims_;
  std::vector<PrimitiveCohomologyDims> ph_plus_;
  std::vector<std::size_t> ph_d_;
  std::vector<QuotientStructure> ph_plus_quotients_; // route (ker d ∩ P)/dd^Λ(P)
  std::map<std::pair<int, int>, HrsGroup> hrs_;
  std::vector<DecompositionVerdict> verdicts_;

  HrsGroup compute_hrs(int r, int s) const;
  DecompositionVerdict compute_decomposition(int k) const;
};

} // namespace lefschetz
