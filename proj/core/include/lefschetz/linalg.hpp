#pragma once

#include "lefschetz/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Dimensions are fixed at construction.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  /// Matrix whose rows are the given vectors, all of length `cols`.
  static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector> &columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVector row_vector(std::size_t r) const;
  QVector column(std::size_t c) const;

  QMatrix transpose() const;
  bool is_zero() const;
  QVector apply(std::span<const Rational> x) const;

  /// Row-stack of two matrices with equal column count.
  QMatrix stacked(const QMatrix &below) const;

  QMatrix &operator+=(const QMatrix &o);
  QMatrix &operator-=(const QMatrix &o);
  QMatrix &operator*=(const Rational &s);

  friend QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational &s) { return a *= s; }
  friend QMatrix operator*(const Rational &s, QMatrix a) { return a *= s; }
  friend QMatrix operator-(QMatrix a) { return a *= Rational(-1); }
  friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
  friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced; // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

RrefResult rref(const QMatrix &m);
std::size_t rank(const QMatrix &m);

/// Inverse of a square matrix; throws InternalInconsistency if singular.
QMatrix inverse(const QMatrix &m);

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is unique when m has full column rank.
std::optional<QVector> solve(const QMatrix &m, std::span<const Rational> b);

/// Determinant of a square matrix by Gaussian elimination.
Rational determinant(QMatrix m);

bool is_zero_vector(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// A linear subspace of Q^ambient, stored as its canonical RREF basis.
/// Two subspaces are equal iff their bases are identical matrices.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(const QMatrix &generators_as_rows);
  static Subspace span(const std::vector<QVector> &generators, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Rows are the canonical basis vectors.
  const QMatrix &basis() const { return basis_; }
  std::vector<QVector> vectors() const;
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace &other) const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
Subspace kernel(const QMatrix &m);
/// Column space of m.
Subspace image(const QMatrix &m);
/// Image of a subspace under m (m has ambient_dim columns).
Subspace image_of(const QMatrix &m, const Subspace &s);
/// Orthogonal complement under the standard dot product.
Subspace orthogonal_complement(const Subspace &s);

Subspace subspace_sum(const Subspace &a, const Subspace &b);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace &a, const Subspace &b);

inline bool contains(const Subspace &s, std::span<const Rational> v) { return s.contains(v); }

/// Presentation of the quotient v/w. Representatives span the orthogonal
/// complement of w inside v, so each class has a canonical representative.
class QuotientStructure {
public:
  QuotientStructure() = default;
  QuotientStructure(const Subspace &w, const Subspace &v);

  std::size_t dim() const { return representatives_.size(); }
  std::size_t ambient_dim() const { return v_.ambient_dim(); }
  const std::vector<QVector> &representatives() const { return representatives_; }
  const Subspace &numerator() const { return v_; }
  const Subspace &denominator() const { return w_; }

  /// Coordinates of x in v/w; zero iff x lies in w. Throws NotSubspace if x is not in v.
  QVector coordinates(std::span<const Rational> x) const;
  /// Representative of a coordinate vector.
  QVector lift(std::span<const Rational> coords) const;

private:
  Subspace w_;
  Subspace v_;
  std::vector<QVector> representatives_;
  QMatrix projector_; // (R R^T)^{-1} R
};

} // namespace lefschetz
