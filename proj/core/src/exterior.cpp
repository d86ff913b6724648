#include "lefschetz/exterior.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lefschetz {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex MultiIndex::from_indices(std::span<const int> one_based) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : one_based) {
    if (i < 1 || i > kMaxDim) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range");
    if (i <= prev) throw InputError("multi-index must be strictly increasing");
    mask |= 1u << (i - 1);
    prev = i;
  }
  return MultiIndex(mask);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // The tuples agree below the lowest differing bit; whoever owns that bit
  // has the smaller next entry.
  const std::uint32_t diff = a.mask_ ^ b.mask_;
  const std::uint32_t low = diff & (~diff + 1);
  return (a.mask_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<MultiIndex> monomial_basis(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  out.reserve(binomial(dim, k));
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(MultiIndex::from_indices(idx));
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == dim - k + p + 1) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::size_t basis_position(int dim, MultiIndex m) {
  // Lex rank via the combinatorial number system.
  const int k = m.degree();
  std::size_t pos = 0;
  int prev = 0;
  int i = 0;
  for (std::uint32_t bits = m.mask(); bits; bits &= bits - 1, ++i) {
    const int c = std::countr_zero(bits) + 1;
    for (int j = prev + 1; j < c; ++j) pos += binomial(dim - j, k - i - 1);
    prev = c;
  }
  return pos;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.overlaps(b)) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (std::uint32_t bits = b.mask(); bits; bits &= bits - 1) {
    const std::uint32_t below_or_at = (bits & (~bits + 1)) - 1;
    inversions += std::popcount(a.mask() & ~below_or_at);
  }
  return (inversions & 1) ? -1 : 1;
}

std::string render_indices(MultiIndex m, int dim) {
  const auto idx = m.indices();
  std::string out;
  if (dim <= 9) {
    for (int i : idx) out += static_cast<char>('0' + i);
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + "]";
}

// ---------------------------------------------------------------------------
// Form

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw DimMismatch("form dimension out of range");
  if (degree < 0 || degree > dim) throw MixedDegree("form degree out of range 0..dim");
}

Form Form::monomial(int dim, MultiIndex m, Rational coefficient) {
  Form f(dim, m.degree());
  f.add_term(m, coefficient);
  return f;
}

Form Form::scalar(int dim, Rational value) { return monomial(dim, MultiIndex(), std::move(value)); }

Form Form::from_coordinates(int dim, int degree, std::span<const Rational> coords) {
  Form f(dim, degree);
  const auto basis = monomial_basis(dim, degree);
  if (coords.size() != basis.size()) throw DimMismatch("coordinate vector has wrong length");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) f.terms_.emplace(basis[i], coords[i]);
  return f;
}

Rational Form::coefficient(MultiIndex m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Form::add_term(MultiIndex m, const Rational &c) {
  if (m.degree() != degree_) throw MixedDegree("term degree differs from form degree");
  if (m.max_index() > dim_) throw IndexOutOfRange("term index exceeds form dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QVector Form::coordinates() const {
  QVector v(binomial(dim_, degree_));
  for (const auto &[m, c] : terms_) v[basis_position(dim_, m)] = c;
  return v;
}

void Form::check_compatible(const Form &o, const char *op) {
  if (o.dim_ != dim_) throw DimMismatch(std::string(op) + " of forms with different dimensions");
  if (o.degree_ != degree_) {
    if (o.is_zero()) return;
    if (is_zero()) {
      degree_ = o.degree_;
      return;
    }
    throw MixedDegree(std::string(op) + " of forms of degree " + std::to_string(degree_) + " and " +
                      std::to_string(o.degree_));
  }
}

Form &Form::operator+=(const Form &o) {
  check_compatible(o, "sum");
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form &Form::operator-=(const Form &o) {
  check_compatible(o, "difference");
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form &Form::operator*=(const Rational &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Form &a, const Form &b) {
  if (a.dim_ != b.dim_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

std::string render_terms(const Form &f, bool with_prefix) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : f.terms()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (negative) out += "-";
    else if (!first) out += "+";
    first = false;
    if (m.degree() == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    if (with_prefix) out += "e";
    out += render_indices(m, f.dim());
  }
  return out;
}

} // namespace

std::string Form::str() const { return render_terms(*this, true); }
std::string Form::sum_str() const { return render_terms(*this, false); }

Form wedge(const Form &a, const Form &b) {
  if (a.dim() != b.dim()) throw DimMismatch("wedge of forms with different dimensions");
  const int deg = a.degree() + b.degree();
  if (deg > a.dim()) return Form(a.dim(), 0);
  Form out(a.dim(), deg);
  for (const auto &[ma, ca] : a.terms()) {
    for (const auto &[mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(MultiIndex::from_mask(ma.mask() | mb.mask()), s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bivector and contraction

Bivector Bivector::from_antisymmetric(const QMatrix &m) {
  if (m.rows() != m.cols()) throw DimMismatch("bivector from a non-square matrix");
  Bivector b(static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      b.add(static_cast<int>(i) + 1, static_cast<int>(j) + 1, m(i, j));
  return b;
}

void Bivector::add(int i, int j, const Rational &c) {
  if (i == j) throw InputError("bivector with repeated index");
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw IndexOutOfRange("bivector index out of range");
  if (c.is_zero()) return;
  const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  const Rational v = i < j ? c : -c;
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Bivector::coefficient(int i, int j) const {
  if (i == j) return {};
  const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  auto it = terms_.find(key);
  if (it == terms_.end()) return {};
  return i < j ? it->second : -it->second;
}

std::pair<int, MultiIndex> interior(int one_based, MultiIndex m) {
  if (!m.contains(one_based)) return {0, m};
  const std::uint32_t bit = 1u << (one_based - 1);
  const int position = std::popcount(m.mask() & (bit - 1));
  return {(position & 1) ? -1 : 1, MultiIndex::from_mask(m.mask() & ~bit)};
}

Form contract(const Bivector &xi, const Form &a) {
  if (xi.dim() != a.dim()) throw DimMismatch("contraction with a bivector of different dimension");
  if (a.degree() < 2) return Form(a.dim(), 0);
  Form out(a.dim(), a.degree() - 2);
  for (const auto &[m, c] : a.terms()) {
    for (const auto &[ij, p] : xi.terms()) {
      const auto [sj, mj] = interior(ij.second, m);
      if (sj == 0) continue;
      const auto [si, mij] = interior(ij.first, mj);
      if (si == 0) continue;
      out.add_term(mij, (si * sj > 0) ? c * p : -(c * p));
    }
  }
  return out;
}

Rational top_coefficient(const Form &a) {
  if (a.is_zero()) return {};
  if (a.degree() != a.dim()) throw MixedDegree("top coefficient of a form that is not of top degree");
  return a.terms().begin()->second;
}

QMatrix operator_matrix(const std::function<Form(const Form &)> &f, int dim, int k, int shift) {
  const auto src = monomial_basis(dim, k);
  const int target = k + shift;
  QMatrix m(binomial(dim, target), src.size());
  if (target < 0 || target > dim) return m;
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Form image = f(Form::monomial(dim, src[c]));
    if (image.is_zero()) continue;
    if (image.degree() != target) throw MixedDegree("operator produced a form of unexpected degree");
    for (const auto &[mi, coef] : image.terms()) m(basis_position(dim, mi), c) = coef;
  }
  return m;
}

// ---------------------------------------------------------------------------
// GradedOperator

GradedOperator::GradedOperator(int dim, int shift) : dim_(dim), shift_(shift) {
  blocks_.reserve(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) blocks_.emplace_back(binomial(dim, k + shift), binomial(dim, k));
}

GradedOperator GradedOperator::from_function(int dim, int shift, const std::function<Form(const Form &)> &f) {
  GradedOperator op(dim, shift);
  for (int k = 0; k <= dim; ++k) op.blocks_[static_cast<std::size_t>(k)] = operator_matrix(f, dim, k, shift);
  return op;
}

GradedOperator GradedOperator::identity(int dim) {
  return diagonal(dim, [](int) { return Rational(1); });
}

GradedOperator GradedOperator::diagonal(int dim, const std::function<Rational(int)> &scale) {
  GradedOperator op(dim, 0);
  for (int k = 0; k <= dim; ++k) op.blocks_[static_cast<std::size_t>(k)] = QMatrix::identity(binomial(dim, k)) * scale(k);
  return op;
}

void GradedOperator::set_block(int k, QMatrix m) {
  auto &b = blocks_.at(static_cast<std::size_t>(k));
  if (m.rows() != b.rows() || m.cols() != b.cols()) throw DimMismatch("graded operator block has wrong shape");
  b = std::move(m);
}

Form GradedOperator::apply(const Form &a) const {
  if (a.dim() != dim_) throw DimMismatch("operator applied to a form of different dimension");
  const int k = a.degree();
  if (!target_in_range(k) || a.is_zero()) return Form(dim_, std::clamp(k + shift_, 0, dim_));
  const QVector coords = a.coordinates();
  const QVector image = block(k).apply(coords);
  return Form::from_coordinates(dim_, k + shift_, image);
}

bool GradedOperator::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const QMatrix &m) { return m.is_zero(); });
}

GradedOperator &GradedOperator::operator+=(const GradedOperator &o) {
  if (o.dim_ != dim_ || o.shift_ != shift_) throw DimMismatch("sum of graded operators of different type");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
  return *this;
}

GradedOperator &GradedOperator::operator-=(const GradedOperator &o) {
  if (o.dim_ != dim_ || o.shift_ != shift_) throw DimMismatch("difference of graded operators of different type");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
  return *this;
}

GradedOperator &GradedOperator::operator*=(const Rational &s) {
  for (auto &b : blocks_) b *= s;
  return *this;
}

GradedOperator operator*(const GradedOperator &a, const GradedOperator &b) {
  if (a.dim_ != b.dim_) throw DimMismatch("composition of graded operators of different dimension");
  GradedOperator out(a.dim_, a.shift_ + b.shift_);
  for (int k = 0; k <= a.dim_; ++k) {
    if (!b.target_in_range(k) || !out.target_in_range(k)) continue;
    out.blocks_[static_cast<std::size_t>(k)] = a.block(k + b.shift_) * b.block(k);
  }
  return out;
}

GradedOperator GradedOperator::power(int exponent) const {
  if (exponent < 0) throw InputError("negative operator power");
  GradedOperator out = GradedOperator::identity(dim_);
  for (int i = 0; i < exponent; ++i) out = *this * out;
  return out;
}

GradedOperator commutator(const GradedOperator &a, const GradedOperator &b) { return a * b - b * a; }
GradedOperator anticommutator(const GradedOperator &a, const GradedOperator &b) { return a * b + b * a; }

} // namespace lefschetz
