#include "lefschetz/symplectic.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

QMatrix omega_to_matrix(const Form &omega) {
  const auto m = static_cast<std::size_t>(omega.dim());
  QMatrix w(m, m);
  for (const auto &[mono, c] : omega.terms()) {
    const auto ij = mono.indices();
    const auto i = static_cast<std::size_t>(ij[0] - 1), j = static_cast<std::size_t>(ij[1] - 1);
    w(i, j) = c;
    w(j, i) = -c;
  }
  return w;
}

Form power(const Form &a, int e) {
  Form out = Form::scalar(a.dim(), 1);
  for (int i = 0; i < e; ++i) out = wedge(out, a);
  return out;
}

/// Star operator from the defining relation α ∧ ⋆β = (ω^{-1})^k(α,β) ω^n/n!.
/// The wedge pairing ∧^k × ∧^{2n−k} → ∧^{2n} pairs each monomial only with
/// its complement, so the linear system is a signed permutation.
StarOperator build_star(int dim, const QMatrix &inverse_pairing, const Rational &volume) {
  const std::uint32_t top = (1u << dim) - 1;
  std::vector<QMatrix> blocks;
  for (int k = 0; k <= dim; ++k) {
    const auto basis = monomial_basis(dim, k);
    QMatrix block(basis.size(), basis.size());
    for (std::size_t bcol = 0; bcol < basis.size(); ++bcol) {
      const auto bi = basis[bcol].indices();
      for (const auto &alpha : basis) {
        const auto ai = alpha.indices();
        QMatrix gram(ai.size(), bi.size());
        for (std::size_t r = 0; r < ai.size(); ++r)
          for (std::size_t c = 0; c < bi.size(); ++c)
            gram(r, c) = inverse_pairing(static_cast<std::size_t>(ai[r] - 1), static_cast<std::size_t>(bi[c] - 1));
        const Rational det = determinant(gram);
        if (det.is_zero()) continue;
        const MultiIndex complement = MultiIndex::from_mask(top & ~alpha.mask());
        block(basis_position(dim, complement), bcol) = Rational(wedge_sign(alpha, complement)) * det * volume;
      }
    }
    blocks.push_back(std::move(block));
  }
  return StarOperator(std::move(blocks));
}

/// Multiply block k by (−1)^k.
GradedOperator alternate(const GradedOperator &op) {
  GradedOperator out = op;
  for (int k = 0; k <= op.dim(); ++k)
    if (k % 2 == 1) out.set_block(k, -op.block(k));
  return out;
}

void require(bool ok, const std::string &what) {
  if (!ok) throw InternalInconsistency(what);
}

} // namespace

Form StarOperator::apply(const Form &a) const {
  if (a.dim() != dim()) throw DimMismatch("star applied to a form of different dimension");
  const int k = a.degree();
  return Form::from_coordinates(dim(), dim() - k, block(k).apply(a.coordinates()));
}

GradedOperator StarOperator::conjugate(const GradedOperator &op) const {
  const int m = dim();
  GradedOperator out(m, -op.shift());
  for (int k = 0; k <= m; ++k) {
    const int mid = m - k;
    if (!op.target_in_range(mid)) continue;
    out.set_block(k, block(mid + op.shift()) * op.block(mid) * block(k));
  }
  return out;
}

bool StarOperator::is_involution() const {
  const int m = dim();
  for (int k = 0; k <= m; ++k)
    if (!(block(m - k) * block(k) == QMatrix::identity(block(k).cols()))) return false;
  return true;
}

SymplecticStructure SymplecticStructure::validate(LieAlgebra g, Form omega, PoissonSign sign) {
  const int dim = g.dim();
  if (omega.dim() != dim) throw DimMismatch("ω has a different dimension than the Lie algebra");
  if (!omega.is_zero() && omega.degree() != 2) throw MixedDegree("ω is not a 2-form");
  if (dim % 2 != 0) throw OddDimension("symplectic structures need even dimension, got " + std::to_string(dim));
  if (dim == 0) throw OddDimension("symplectic structures need positive dimension");

  SymplecticStructure s;
  s.n_ = dim / 2;
  s.omega_ = omega.is_zero() ? Form(dim, 2) : omega;

  const Form d_omega = g.differential(s.omega_);
  if (!d_omega.is_zero()) throw NotClosed("ω is not closed: dω = " + d_omega.str(), d_omega.str());
  s.volume_ = top_coefficient(power(s.omega_, s.n_));
  if (s.volume_.is_zero()) throw Degenerate("ω is degenerate: ω^" + std::to_string(s.n_) + " = 0");

  s.g_ = std::move(g);
  s.w_ = omega_to_matrix(s.omega_);
  s.w_inv_ = inverse(s.w_);
  s.inverse_pairing_ = -s.w_inv_;
  s.pi_ = Bivector::from_antisymmetric(sign == PoissonSign::canonical ? s.inverse_pairing_ : s.w_inv_);

  const Form omega_copy = s.omega_;
  const Bivector pi_copy = s.pi_;
  const int n = s.n_;
  s.l_ = GradedOperator::from_function(dim, 2, [&omega_copy](const Form &a) { return wedge(omega_copy, a); });
  s.lambda_ = GradedOperator::from_function(dim, -2, [&pi_copy](const Form &a) { return -contract(pi_copy, a); });
  s.h_ = GradedOperator::diagonal(dim, [n](int k) { return Rational(n - k); });

  // Λω = n pins the sign convention of Π; it is the first thing a flipped
  // convention breaks.
  const Form lambda_omega = s.lambda_.apply(s.omega_);
  require(lambda_omega == Form::scalar(dim, n),
          "Λω = " + lambda_omega.str() + " but must equal n = " + std::to_string(n));
  require(commutator(s.lambda_, s.l_) == s.h_, "[Λ, L] ≠ H");
  require(commutator(s.h_, s.l_) == s.l_ * Rational(-2), "[H, L] ≠ −2L");
  require(commutator(s.h_, s.lambda_) == s.lambda_ * Rational(2), "[H, Λ] ≠ 2Λ");

  s.star_ = build_star(dim, s.inverse_pairing_, s.volume_ / factorial(static_cast<unsigned>(n)));
  require(s.star_.is_involution(), "⋆⋆ ≠ id");
  require(s.lambda_ == s.star_.conjugate(s.l_), "Λ ≠ ⋆L⋆");

  s.d_lambda_ = commutator(s.g_.d(), s.lambda_);
  s.d_lambda_star_ = alternate(s.star_.conjugate(s.g_.d()));
  require(s.d_lambda_ == s.d_lambda_star_, "[d, Λ] ≠ (−1)^k ⋆d⋆");
  s.dd_lambda_ = s.g_.d() * s.d_lambda_;

  s.l_powers_.push_back(GradedOperator::identity(dim));
  for (int r = 1; r <= dim; ++r) s.l_powers_.push_back(s.l_ * s.l_powers_.back());
  for (int k = 0; k <= dim; ++k) {
    Subspace p = kernel(s.lambda_.block(k));
    if (k <= n) {
      require(p == kernel(s.L_power(n - k + 1).block(k)), "ker Λ ≠ ker L^{n−k+1} in degree " + std::to_string(k));
    } else {
      require(p.is_zero(), "non-zero primitive forms above the middle degree");
    }
    s.primitive_.push_back(std::move(p));
  }
  return s;
}

const GradedOperator &SymplecticStructure::L_power(int r) const {
  if (r < 0 || static_cast<std::size_t>(r) >= l_powers_.size()) throw InputError("power of L out of range");
  return l_powers_[static_cast<std::size_t>(r)];
}

Rational SymplecticStructure::pairing(const Form &a, const Form &b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DimMismatch("pairing of forms of wrong dimension");
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() != b.degree()) throw MixedDegree("pairing of forms of different degree");
  Rational total;
  for (const auto &[ma, ca] : a.terms()) {
    const auto ai = ma.indices();
    for (const auto &[mb, cb] : b.terms()) {
      const auto bi = mb.indices();
      QMatrix gram(ai.size(), bi.size());
      for (std::size_t r = 0; r < ai.size(); ++r)
        for (std::size_t c = 0; c < bi.size(); ++c)
          gram(r, c) = inverse_pairing_(static_cast<std::size_t>(ai[r] - 1), static_cast<std::size_t>(bi[c] - 1));
      total += ca * cb * determinant(gram);
    }
  }
  return total;
}

Form op_L(const SymplecticStructure &s, const Form &a) { return s.L().apply(a); }
Form op_Lambda(const SymplecticStructure &s, const Form &a) { return s.Lambda().apply(a); }
Form op_H(const SymplecticStructure &s, const Form &a) { return s.H().apply(a); }
Form symplectic_star(const SymplecticStructure &s, const Form &a) { return s.star().apply(a); }
Form d_lambda(const SymplecticStructure &s, const Form &a) { return s.d_lambda().apply(a); }

Rational lefschetz_coefficient(int r, int l, int n, int k) {
  if (r < std::max(k - n, 0) || l < 0) throw InputError("Lefschetz coefficient index out of range");
  const int base = n - k + 2 * r + 1;
  Rational a = Rational(base) * Rational(base);
  if (l % 2) a = -a;
  for (int i = 0; i <= r; ++i) {
    const int den = base - i;
    if (den == 0) throw InternalInconsistency("vanishing denominator in Lefschetz coefficient");
    a /= Rational(den);
  }
  for (int j = 0; j <= l; ++j) {
    const int den = base + j;
    if (den == 0) throw InternalInconsistency("vanishing denominator in Lefschetz coefficient");
    a /= Rational(den);
  }
  return a;
}

namespace {

int component_min(int n, int k) { return std::max(k - n, 0); }

} // namespace

Form lefschetz_reassemble(const SymplecticStructure &s, const LefschetzComponents &c) {
  Form out(s.dim(), c.degree);
  for (const auto &[r, b] : c.components) {
    Form term = b;
    for (int i = 0; i < r; ++i) term = s.L().apply(term);
    out += term * (Rational(1) / factorial(static_cast<unsigned>(r)));
  }
  return out;
}

LefschetzComponents lefschetz_decompose_by_solve(const SymplecticStructure &s, const Form &a) {
  const int k = a.degree();
  const int dim = s.dim();
  const int n = s.n();
  struct Block {
    int r;
    std::vector<QVector> primitive_basis;
  };
  std::vector<Block> blocks;
  std::vector<QVector> columns;
  for (int r = component_min(n, k); 2 * r <= k; ++r) {
    Block b{r, s.primitive(k - 2 * r).vectors()};
    const Rational scale = Rational(1) / factorial(static_cast<unsigned>(r));
    const QMatrix lr = s.L_power(r).block(k - 2 * r);
    for (const auto &v : b.primitive_basis) {
      QVector col = lr.apply(v);
      for (auto &x : col) x *= scale;
      columns.push_back(std::move(col));
    }
    blocks.push_back(std::move(b));
  }
  const QMatrix m = QMatrix::from_columns(columns, binomial(dim, k));
  const auto coords = solve(m, a.coordinates());
  if (!coords) throw InternalInconsistency("form is not in the Lefschetz direct sum");
  LefschetzComponents out;
  out.degree = k;
  std::size_t offset = 0;
  for (const auto &b : blocks) {
    QVector v(binomial(dim, k - 2 * b.r));
    for (std::size_t i = 0; i < b.primitive_basis.size(); ++i) {
      const Rational &c = (*coords)[offset + i];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b.primitive_basis[i][j];
    }
    offset += b.primitive_basis.size();
    out.components.emplace(b.r, Form::from_coordinates(dim, k - 2 * b.r, v));
  }
  return out;
}

LefschetzComponents lefschetz_decompose(const SymplecticStructure &s, const Form &a) {
  if (a.dim() != s.dim()) throw DimMismatch("form of wrong dimension");
  const int k = a.degree();
  const int n = s.n();
  LefschetzComponents out;
  out.degree = k;
  for (int r = component_min(n, k); 2 * r <= k; ++r) {
    Form b(s.dim(), k - 2 * r);
    // Λ^{r+ℓ} A vanishes once 2(r+ℓ) > k.
    Form lambda_power = a;
    for (int i = 0; i < r; ++i) lambda_power = s.Lambda().apply(lambda_power);
    for (int l = 0; 2 * (r + l) <= k; ++l) {
      Form term = lambda_power;
      for (int i = 0; i < l; ++i) term = s.L().apply(term);
      b += term * (lefschetz_coefficient(r, l, n, k) / factorial(static_cast<unsigned>(l)));
      lambda_power = s.Lambda().apply(lambda_power);
    }
    out.components.emplace(r, std::move(b));
  }

  const LefschetzComponents oracle = lefschetz_decompose_by_solve(s, a);
  for (const auto &[r, b] : oracle.components) {
    if (!(out.components.at(r) == b)) {
      LefschetzComponents fallback = oracle;
      fallback.formula_agrees = false;
      return fallback;
    }
  }
  for (const auto &[r, b] : out.components)
    require(s.Lambda().apply(b).is_zero(), "Lefschetz component B^(" + std::to_string(k - 2 * r) + ") not primitive");
  require(lefschetz_reassemble(s, out) == a, "Lefschetz reassembly differs from the input");
  return out;
}

Subspace primitive_subspace(const SymplecticStructure &s, int k) {
  if (k < 0 || k > s.dim()) return Subspace::zero(0);
  return s.primitive(k);
}

std::vector<IdentityCheck> operator_identities(const SymplecticStructure &s) {
  const int dim = s.dim();
  const auto &d = s.d();
  const auto &L = s.L();
  const auto &Lam = s.Lambda();
  const auto &H = s.H();
  const auto &dl = s.d_lambda();
  const auto &ddl = s.dd_lambda();
  auto zero_like = [dim](int shift) { return GradedOperator(dim, shift); };

  std::vector<IdentityCheck> out;
  auto add = [&out](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  add("[Lambda,L] = H", commutator(Lam, L) == H);
  add("[H,L] = -2L", commutator(H, L) == L * Rational(-2));
  add("[H,Lambda] = 2Lambda", commutator(H, Lam) == Lam * Rational(2));
  add("star star = id", s.star().is_involution());
  add("Lambda = star L star", Lam == s.star().conjugate(L));
  add("[d,L] = 0", commutator(d, L) == zero_like(3));
  add("[dLambda,L] = d", commutator(dl, L) == d);
  add("[ddLambda,L] = 0", commutator(ddl, L) == zero_like(2));
  add("[d,Lambda] = dLambda", commutator(d, Lam) == dl);
  add("[dLambda,Lambda] = 0", commutator(dl, Lam) == zero_like(-3));
  add("[ddLambda,Lambda] = 0", commutator(ddl, Lam) == zero_like(-2));
  add("[d,H] = d", commutator(d, H) == d);
  add("[dLambda,H] = -dLambda", commutator(dl, H) == -dl);
  add("[ddLambda,H] = 0", commutator(ddl, H) == zero_like(0));
  add("d^2 = 0", (d * d).is_zero());
  add("dLambda^2 = 0", (dl * dl).is_zero());
  add("d dLambda + dLambda d = 0", anticommutator(d, dl).is_zero());
  add("dLambda = (-1)^k star d star", dl == s.d_lambda_via_star());

  const int n = s.n();
  bool iso = true;
  for (int k = 0; k <= n; ++k) {
    const QMatrix lk = s.L_power(k).block(n - k);
    iso = iso && lk.rows() == lk.cols() && rank(lk) == lk.cols();
  }
  add("L^k: forms^(n-k) -> forms^(n+k) iso", iso);
  bool injective = true;
  for (int j = 0; j <= n - 1; ++j) {
    const QMatrix l1 = L.block(j);
    injective = injective && rank(l1) == l1.cols();
  }
  add("L injective below degree n", injective);
  bool lefschetz_sum = true;
  for (int k = 0; k <= dim; ++k) {
    std::size_t total = 0;
    for (int r = std::max(k - n, 0); 2 * r <= k; ++r) total += rank(s.L_power(r).block(k - 2 * r) * s.primitive(k - 2 * r).basis().transpose());
    lefschetz_sum = lefschetz_sum && total == binomial(dim, k);
  }
  add("forms^k = sum_r L^r P^(k-2r)", lefschetz_sum);
  return out;
}

} // namespace lefschetz
