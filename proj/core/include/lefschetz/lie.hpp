#pragma once

#include "lefschetz/exterior.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// The differentials d e^1, …, d e^m of a Lie algebra's dual basis, as
/// written in compact notation like "(0^4, 12, 13)".
struct StructureEquations {
  int dim = 0;
  std::vector<Form> differentials; // entry k is d e^{k+1}, a 2-form
  std::string source_text;

  /// Canonical text: comma separated entries, "0" for closed generators,
  /// terms in lex order without the `e` prefix, e.g. "0,0,0,12,14-23,15+34".
  std::string str() const;
};

/// Parses structure equations. Grammar (whitespace insignificant):
///
///   equations := ["("] entry ("," entry)* [")"]
///   entry     := "0" ["^" nat] | sum
///   sum       := ["-"] term (("+"|"-") term)*
///   term      := [rational "*"] pair
///   pair      := digit digit | "[" nat "," nat "]"
///
/// Digit pairs are only accepted when dim ≤ 9. When `dim` is omitted it is
/// the number of entries after run-length expansion.
StructureEquations parse_structure_equations(std::string_view text, std::optional<int> dim = std::nullopt);

/// Parses a homogeneous form with the `sum` grammar, where a monomial is
/// k digits or "[n,…,n]" (an optional leading `e` is tolerated). Unsorted
/// indices pick up the permutation sign. "0" is the zero form of `degree`.
Form parse_form(std::string_view text, int dim, std::optional<int> degree = std::nullopt);

/// Finite-dimensional Lie algebra presented by its Chevalley–Eilenberg
/// differential. Construction verifies d∘d = 0 in every degree.
class LieAlgebra {
public:
  /// Throws JacobiViolation with the failing degree and a witness monomial.
  static LieAlgebra build(StructureEquations structure);

  int dim() const { return structure_.dim; }
  const StructureEquations &structure() const { return structure_; }
  const GradedOperator &d() const { return d_; }
  Form differential(const Form &a) const { return d_.apply(a); }

  /// c^k_{ij} with [e_i, e_j] = Σ_k c^k_{ij} e_k, related to the differential
  /// by d e^k = −Σ_{i<j} c^k_{ij} e^{ij}. Indices are 1-based.
  const Rational &structure_constant(int k, int i, int j) const;
  QVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Matrix of ad_x in the basis e_1..e_m.
  QMatrix ad(std::span<const Rational> x) const;

private:
  LieAlgebra() = default;
  StructureEquations structure_;
  GradedOperator d_;
  std::vector<Rational> constants_; // [k][i][j], 0-based, dim^3
};

struct LieProperties {
  bool nilpotent = false;
  bool solvable = false;
  bool unimodular = false;
  bool abelian = false;
};

/// Nilpotency through the lower central series, solvability through the
/// derived series, unimodularity through trace(ad_{e_i}) = 0.
LieProperties check_properties(const LieAlgebra &g);

std::vector<Subspace> lower_central_series(const LieAlgebra &g);
std::vector<Subspace> derived_series(const LieAlgebra &g);

} // namespace lefschetz
