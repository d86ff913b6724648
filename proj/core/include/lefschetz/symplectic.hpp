#pragma once

#include "lefschetz/exterior.hpp"
#include "lefschetz/lie.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefschetz {

/// Sign used when building the Poisson bivector Π from ω. Only `canonical`
/// gives a valid structure; `flipped` exists so tests can confirm that the
/// self-check at validation time rejects the wrong convention.
enum class PoissonSign { canonical, flipped };

/// The symplectic star, ∧^k → ∧^{dim−k}, stored per source degree. It is
/// normalised by α ∧ ⋆β = (ω^{-1})^k(α,β) ω^n/n!, the scale at which ⋆⋆ = id. It reverses
/// degree, so it does not fit the fixed-shift GradedOperator.
class StarOperator {
public:
  StarOperator() = default;
  explicit StarOperator(std::vector<QMatrix> blocks) : blocks_(std::move(blocks)) {}

  int dim() const { return static_cast<int>(blocks_.size()) - 1; }
  const QMatrix &block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  Form apply(const Form &a) const;
  /// ⋆ ∘ op ∘ ⋆, which shifts degree by −op.shift().
  GradedOperator conjugate(const GradedOperator &op) const;
  bool is_involution() const;

private:
  std::vector<QMatrix> blocks_;
};

/// A validated invariant symplectic form on a Lie algebra together with
/// every operator of the sl(2) package, materialised as graded matrices.
///
/// Construction establishes: dω = 0, ω^n ≠ 0, Λω = n, the sl(2) relations
/// [Λ,L] = H, [H,L] = −2L, [H,Λ] = 2Λ, ⋆⋆ = id, Λ = ⋆L⋆, and agreement of
/// d^Λ = [d,Λ] with (−1)^k ⋆d⋆ on k-forms.
///
/// Λω = n fixes the sign of Λ. With that sign the star identities read
/// Λ = ⋆L⋆ and [d,Λ] = (−1)^k ⋆d⋆, and the commutation table has [d^Λ,L] = d.
class SymplecticStructure {
public:
  /// Throws OddDimension, NotClosed, Degenerate (ValidationError) for bad
  /// input, and InternalInconsistency if a self-check fails.
  static SymplecticStructure validate(LieAlgebra g, Form omega, PoissonSign sign = PoissonSign::canonical);

  const LieAlgebra &algebra() const { return g_; }
  int dim() const { return g_.dim(); }
  int n() const { return n_; }
  const Form &omega() const { return omega_; }
  /// W(i,j) = ω(e_i, e_j).
  const QMatrix &omega_matrix() const { return w_; }
  const QMatrix &omega_matrix_inverse() const { return w_inv_; }
  /// Π = ω^{-1}; Π^{ij} = ω^{-1}(e^i, e^j) = −(W^{-1})_{ij}.
  const Bivector &poisson() const { return pi_; }
  /// Top coefficient of ω^n.
  const Rational &volume() const { return volume_; }

  const GradedOperator &d() const { return g_.d(); }
  const GradedOperator &L() const { return l_; }
  /// L^r for 0 ≤ r ≤ 2n; powers above n vanish.
  const GradedOperator &L_power(int r) const;
  const GradedOperator &Lambda() const { return lambda_; }
  const GradedOperator &H() const { return h_; }
  const StarOperator &star() const { return star_; }
  /// [d, Λ]
  const GradedOperator &d_lambda() const { return d_lambda_; }
  /// (−1)^k ⋆ d ⋆ on k-forms; kept as an independent cross-check.
  const GradedOperator &d_lambda_via_star() const { return d_lambda_star_; }
  /// d ∘ d^Λ
  const GradedOperator &dd_lambda() const { return dd_lambda_; }

  /// ker Λ in degree k.
  const Subspace &primitive(int k) const { return primitive_.at(static_cast<std::size_t>(k)); }

  /// The bilinear pairing (ω^{-1})^k on two k-forms.
  Rational pairing(const Form &a, const Form &b) const;

private:
  SymplecticStructure() = default;
  LieAlgebra g_ = LieAlgebra::build(StructureEquations{});
  int n_ = 0;
  Form omega_;
  QMatrix w_, w_inv_, inverse_pairing_;
  Bivector pi_;
  Rational volume_;
  StarOperator star_;
  GradedOperator l_, lambda_, h_, d_lambda_, d_lambda_star_, dd_lambda_;
  std::vector<Subspace> primitive_;
  std::vector<GradedOperator> l_powers_;
};

inline SymplecticStructure validate_symplectic(LieAlgebra g, Form omega) {
  return SymplecticStructure::validate(std::move(g), std::move(omega));
}

Form op_L(const SymplecticStructure &s, const Form &a);
Form op_Lambda(const SymplecticStructure &s, const Form &a);
Form op_H(const SymplecticStructure &s, const Form &a);
Form symplectic_star(const SymplecticStructure &s, const Form &a);
Form d_lambda(const SymplecticStructure &s, const Form &a);

/// a_{r,ℓ,(n,k)} = (−1)^ℓ (n−k+2r+1)^2 Π_{i=0..r} 1/(n−k+2r+1−i) Π_{j=0..ℓ} 1/(n−k+2r+1+j).
/// Throws InternalInconsistency on a vanishing denominator.
Rational lefschetz_coefficient(int r, int l, int n, int k);

/// A^{(k)} = Σ_r (1/r!) L^r B^{(k−2r)} with every B primitive.
struct LefschetzComponents {
  int degree = 0;
  std::map<int, Form> components; // r → B^{(k−2r)}, for max(k−n,0) ≤ r ≤ k/2
  /// False when the closed-form coefficients disagreed with the linear-solve
  /// decomposition; the components are then the solver's.
  bool formula_agrees = true;

  const Form &component(int r) const { return components.at(r); }
};

/// Closed-form decomposition, checked against the solver route.
LefschetzComponents lefschetz_decompose(const SymplecticStructure &s, const Form &a);
/// Decomposition by solving in the direct sum ⊕_r L^r P^{k−2r}.
LefschetzComponents lefschetz_decompose_by_solve(const SymplecticStructure &s, const Form &a);
/// Σ_r (1/r!) L^r B^{(k−2r)}.
Form lefschetz_reassemble(const SymplecticStructure &s, const LefschetzComponents &c);

/// ker Λ on ∧^k (equal to ker L^{n−k+1} for k ≤ n, and {0} for k > n).
Subspace primitive_subspace(const SymplecticStructure &s, int k);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// The sl(2) relations, star identities, the nine-entry commutation table
/// between {d, d^Λ, dd^Λ} and {L, Λ, H}, d² = (d^Λ)² = 0, dd^Λ + d^Λd = 0,
/// agreement of both d^Λ routes, and the Lefschetz isomorphisms on forms.
std::vector<IdentityCheck> operator_identities(const SymplecticStructure &s);

} // namespace lefschetz
