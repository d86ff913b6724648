#pragma once

#include "lefschetz/linalg.hpp"
#include "lefschetz/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

inline constexpr int kMaxDim = 24;

std::size_t binomial(int n, int k);

/// Strictly increasing tuple of 1-based generator indices, e.g. e^{136}.
/// Stored as a bit mask (bit i-1 set for index i).
class MultiIndex {
public:
  MultiIndex() = default;
  /// Throws InputError unless the indices are strictly increasing and in 1..kMaxDim.
  static MultiIndex from_indices(std::span<const int> one_based);
  static MultiIndex from_indices(std::initializer_list<int> one_based) {
    return from_indices(std::span<const int>(one_based.begin(), one_based.size()));
  }
  static constexpr MultiIndex from_mask(std::uint32_t mask) { return MultiIndex(mask); }

  constexpr std::uint32_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool contains(int one_based) const { return (mask_ >> (one_based - 1)) & 1u; }
  bool overlaps(MultiIndex o) const { return (mask_ & o.mask_) != 0; }
  /// 1-based, increasing.
  std::vector<int> indices() const;
  int max_index() const { return mask_ ? 32 - std::countl_zero(mask_) : 0; }

  friend constexpr bool operator==(MultiIndex a, MultiIndex b) = default;
  /// Degree first, then lexicographic on the index tuple.
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b);

private:
  constexpr explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// All binomial(dim, k) monomials of degree k in lexicographic order. This
/// order is the basis convention for every coordinate vector and matrix.
std::vector<MultiIndex> monomial_basis(int dim, int k);

/// Position of a degree-k monomial in monomial_basis(dim, k).
std::size_t basis_position(int dim, MultiIndex m);

/// Sign of e^a ∧ e^b relative to e^{a∪b}; 0 when the index sets overlap.
int wedge_sign(MultiIndex a, MultiIndex b);

/// Renders indices as "136" (dim ≤ 9) or "[1,3,10]".
std::string render_indices(MultiIndex m, int dim);

/// Sparse homogeneous element of ∧^k of a `dim`-dimensional dual space.
class Form {
public:
  using Terms = std::map<MultiIndex, Rational>;

  Form() = default;
  Form(int dim, int degree);

  static Form monomial(int dim, MultiIndex m, Rational coefficient = 1);
  static Form scalar(int dim, Rational value);
  static Form from_coordinates(int dim, int degree, std::span<const Rational> coords);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }
  Rational coefficient(MultiIndex m) const;

  /// Adds c·e^m; m must have this form's degree.
  void add_term(MultiIndex m, const Rational &c);

  /// Coefficient vector in the lexicographic monomial basis.
  QVector coordinates() const;

  Form &operator+=(const Form &o);
  Form &operator-=(const Form &o);
  Form &operator*=(const Rational &s);
  friend Form operator+(Form a, const Form &b) { return a += b; }
  friend Form operator-(Form a, const Form &b) { return a -= b; }
  friend Form operator*(Form a, const Rational &s) { return a *= s; }
  friend Form operator*(const Rational &s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= Rational(-1); }

  /// Equal as elements of ∧^•; zero forms compare equal regardless of degree.
  friend bool operator==(const Form &a, const Form &b);

  /// Canonical text: signed `c*e<indices>` terms in lex order, e.g. `e16+e24+e35`.
  std::string str() const;
  /// Same terms without the `e` prefix, as accepted by the form parser.
  std::string sum_str() const;

private:
  void check_compatible(const Form &o, const char *op);
  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

Form wedge(const Form &a, const Form &b);

/// Element of ∧^2 of the primal space, stored once per sorted pair (i < j).
class Bivector {
public:
  Bivector() = default;
  explicit Bivector(int dim) : dim_(dim) {}
  /// Σ_{i<j} m(i,j) e_i ∧ e_j from an antisymmetric matrix.
  static Bivector from_antisymmetric(const QMatrix &m);

  int dim() const { return dim_; }
  void add(int i, int j, const Rational &c); // 1-based, i != j; (j,i) is stored as -(i,j)
  Rational coefficient(int i, int j) const;
  const std::map<std::pair<int, int>, Rational> &terms() const { return terms_; }

private:
  int dim_ = 0;
  std::map<std::pair<int, int>, Rational> terms_;
};

/// ι_{e_i} on a monomial, as (sign, remaining monomial); sign 0 when i ∉ m.
std::pair<int, MultiIndex> interior(int one_based, MultiIndex m);

/// Interior product with a bivector, with ι_{x∧y} := ι_x ∘ ι_y.
/// Degree 0 and 1 forms map to the zero form.
Form contract(const Bivector &xi, const Form &a);

/// Coefficient of e^{1…dim}; pre: degree == dim (zero forms of any degree give 0).
Rational top_coefficient(const Form &a);

/// Matrix of a linear map ∧^k → ∧^{k+shift} in lex monomial bases.
QMatrix operator_matrix(const std::function<Form(const Form &)> &f, int dim, int k, int shift);

/// Linear map on ∧^• that shifts degree by a fixed amount, stored per source degree.
class GradedOperator {
public:
  GradedOperator() = default;
  GradedOperator(int dim, int shift);

  static GradedOperator from_function(int dim, int shift, const std::function<Form(const Form &)> &f);
  static GradedOperator identity(int dim);
  /// Degree-preserving operator acting as scale(k)·id on ∧^k.
  static GradedOperator diagonal(int dim, const std::function<Rational(int)> &scale);

  int dim() const { return dim_; }
  int shift() const { return shift_; }
  bool target_in_range(int k) const { return k + shift_ >= 0 && k + shift_ <= dim_; }

  /// binomial(dim, k+shift) × binomial(dim, k); zero rows when the target degree is out of range.
  const QMatrix &block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  void set_block(int k, QMatrix m);

  Form apply(const Form &a) const;
  bool is_zero() const;

  GradedOperator &operator+=(const GradedOperator &o);
  GradedOperator &operator-=(const GradedOperator &o);
  GradedOperator &operator*=(const Rational &s);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator &b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator &b) { return a -= b; }
  friend GradedOperator operator*(GradedOperator a, const Rational &s) { return a *= s; }
  friend GradedOperator operator*(const Rational &s, GradedOperator a) { return a *= s; }
  friend GradedOperator operator-(GradedOperator a) { return a *= Rational(-1); }
  /// Composition a ∘ b.
  friend GradedOperator operator*(const GradedOperator &a, const GradedOperator &b);
  friend bool operator==(const GradedOperator &a, const GradedOperator &b) = default;

  GradedOperator power(int exponent) const;

private:
  int dim_ = 0;
  int shift_ = 0;
  std::vector<QMatrix> blocks_;
};

/// a∘b − b∘a.
GradedOperator commutator(const GradedOperator &a, const GradedOperator &b);
/// a∘b + b∘a.
GradedOperator anticommutator(const GradedOperator &a, const GradedOperator &b);

} // namespace lefschetz
