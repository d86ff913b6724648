#include "lefschetz/linalg.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lefschetz {

namespace {

bool is_integer(const mpq_class &q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

// acc ± x·y. Integer operands stay on the numerators and skip canonicalisation.
void add_product(mpq_class &acc, const mpq_class &x, const mpq_class &y, mpq_class &scratch, bool subtract) {
  if (is_integer(acc) && is_integer(x) && is_integer(y)) {
    mpz_ptr num = mpq_numref(acc.get_mpq_t());
    if (subtract)
      mpz_submul(num, mpq_numref(x.get_mpq_t()), mpq_numref(y.get_mpq_t()));
    else
      mpz_addmul(num, mpq_numref(x.get_mpq_t()), mpq_numref(y.get_mpq_t()));
    return;
  }
  mpq_mul(scratch.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  if (subtract)
    acc -= scratch;
  else
    acc += scratch;
}

} // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimMismatch("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector> &columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimMismatch("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational &x) { return x.is_zero(); });
}

QVector QMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimMismatch("matrix-vector size mismatch");
  QVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto &a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) acc += a.raw() * x[c].raw();
    }
    y[r] = Rational(acc);
  }
  return y;
}

QMatrix QMatrix::stacked(const QMatrix &below) const {
  if (below.cols_ != cols_) throw DimMismatch("stacking matrices with different column counts");
  QMatrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

QMatrix &QMatrix::operator+=(const QMatrix &o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix &QMatrix::operator*=(const Rational &s) {
  for (auto &x : data_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
  if (a.cols_ != b.rows_) throw DimMismatch("matrix product shape mismatch");
  QMatrix p(a.rows_, b.cols_);
  std::vector<std::vector<std::size_t>> b_support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) b_support[k].push_back(j);
  mpq_class scratch;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto &aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : b_support[k]) add_product(p(i, j).raw(), aik.raw(), b(k, j).raw(), scratch, false);
    }
  }
  return p;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const QMatrix &m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Fraction-free elimination on integer rows, each kept primitive.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  mpz_class scale;
  for (std::size_t r = 0; r < rows; ++r) {
    scale = 1;
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(r, j).is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), mpq_denref(m(r, j).raw().get_mpq_t()));
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      const mpq_srcptr q = m(r, j).raw().get_mpq_t();
      mpz_divexact(a[r][j].get_mpz_t(), scale.get_mpz_t(), mpq_denref(q));
      a[r][j] *= mpz_class(mpq_numref(q));
    }
  }

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  mpz_class g, fp, fr;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      if (sel == rows || mpz_cmpabs(a[r][c].get_mpz_t(), a[sel][c].get_mpz_t()) < 0) sel = r;
      if (mpz_cmpabs_ui(a[sel][c].get_mpz_t(), 1) == 0) break;
    }
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    auto &p = a[pivot_row];
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(p[j]) != 0) support.push_back(j);

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(a[r][c]) == 0) continue;
      auto &row = a[r];
      mpz_gcd(g.get_mpz_t(), p[c].get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(fp.get_mpz_t(), p[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(fr.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      if (fp != 1)
        for (auto &x : row)
          if (sgn(x) != 0) x *= fp;
      for (std::size_t j : support) mpz_submul(row[j].get_mpz_t(), fr.get_mpz_t(), p[j].get_mpz_t());
      g = 0;
      for (const auto &x : row)
        if (sgn(x) != 0) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
          if (g == 1) break;
        }
      if (g > 1)
        for (auto &x : row)
          if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    pivots.push_back(c);
    ++pivot_row;
  }

  RrefResult out{QMatrix(rows, cols), pivots, pivot_row};
  for (std::size_t r = 0; r < pivot_row; ++r) {
    const mpz_class &lead = a[r][pivots[r]];
    for (std::size_t j = pivots[r]; j < cols; ++j) {
      if (sgn(a[r][j]) == 0) continue;
      mpq_class &x = out.reduced(r, j).raw();
      mpq_set_num(x.get_mpq_t(), a[r][j].get_mpz_t());
      mpq_set_den(x.get_mpq_t(), lead.get_mpz_t());
      x.canonicalize();
    }
  }
  return out;
}

std::size_t rank(const QMatrix &m) { return rref(m).rank; }

QMatrix inverse(const QMatrix &m) {
  if (m.rows() != m.cols()) throw DimMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1)
    throw InternalInconsistency("inverse of a singular matrix");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

std::optional<QVector> solve(const QMatrix &m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimMismatch("right-hand side has wrong length");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto red = rref(aug);
  if (red.rank > 0 && red.pivot_columns[red.rank - 1] == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_columns[r]] = red.reduced(r, m.cols());
  return x;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DimMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return {};
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x.is_zero(); });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimMismatch("dot product size mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t ambient) { return span(QMatrix::identity(ambient)); }

Subspace Subspace::span(const QMatrix &generators) {
  Subspace s(generators.cols());
  auto red = rref(generators);
  s.basis_ = QMatrix(red.rank, generators.cols());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < generators.cols(); ++c) s.basis_(r, c) = red.reduced(r, c);
  s.pivots_ = std::move(red.pivot_columns);
  return s;
}

Subspace Subspace::span(const std::vector<QVector> &generators, std::size_t ambient) {
  return span(QMatrix::from_rows(generators, ambient));
}

std::vector<QVector> Subspace::vectors() const {
  std::vector<QVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
  // Reduce against the RREF basis: the pivot entries of v determine the combination.
  QVector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational f = residual[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (!basis_(r, c).is_zero()) residual[c] -= f * basis_(r, c);
  }
  return is_zero_vector(residual);
}

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("subspace ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace kernel(const QMatrix &m) {
  const std::size_t cols = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivot_columns) is_pivot[p] = true;
  std::vector<QVector> gens;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivot_columns[r]] = -red.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, cols);
}

Subspace image(const QMatrix &m) { return Subspace::span(m.transpose()); }

Subspace image_of(const QMatrix &m, const Subspace &s) {
  if (m.cols() != s.ambient_dim()) throw AmbientMismatch("map domain does not match subspace");
  return Subspace::span(s.basis() * m.transpose());
}

Subspace orthogonal_complement(const Subspace &s) { return kernel(s.basis()); }

Subspace subspace_sum(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum of subspaces in different ambients");
  return Subspace::span(a.basis().stacked(b.basis()));
}

Subspace subspace_intersect(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("intersection of subspaces in different ambients");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  if (b.is_full()) return a;
  if (a.is_full()) return b;
  // b = {x : C x = 0} with C spanning b^⊥, so a ∩ b = {aᵀy : C aᵀ y = 0}.
  const QMatrix constraints = orthogonal_complement(b).basis();
  const QMatrix at = a.basis().transpose();
  const Subspace y = kernel(constraints * at);
  if (y.is_zero()) return Subspace::zero(n);
  return Subspace::span(y.basis() * a.basis());
}

// ---------------------------------------------------------------------------
// QuotientStructure

QuotientStructure::QuotientStructure(const Subspace &w, const Subspace &v) : w_(w), v_(v) {
  if (w.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("quotient of subspaces in different ambients");
  if (!v.contains(w)) throw NotSubspace("quotient denominator is not contained in the numerator");
  const Subspace complement = subspace_intersect(v, orthogonal_complement(w));
  representatives_ = complement.vectors();
  const QMatrix &r = complement.basis();
  if (!representatives_.empty()) projector_ = inverse(r * r.transpose()) * r;
  else projector_ = QMatrix(0, v.ambient_dim());
}

QVector QuotientStructure::coordinates(std::span<const Rational> x) const {
  if (!v_.contains(x)) throw NotSubspace("vector is not in the quotient numerator");
  return projector_.apply(x);
}

QVector QuotientStructure::lift(std::span<const Rational> coords) const {
  if (coords.size() != dim()) throw DimMismatch("coordinate vector has wrong length");
  QVector out(ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += coords[i] * representatives_[i][c];
  }
  return out;
}

} // namespace lefschetz
