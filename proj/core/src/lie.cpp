#include "lefschetz/lie.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

/// d on a monomial, extended as an odd derivation from the degree-1 data.
Form differential_of_monomial(const StructureEquations &s, MultiIndex m) {
  const int dim = s.dim;
  const auto idx = m.indices();
  Form out(dim, std::min(m.degree() + 1, dim));
  if (m.degree() + 1 > dim) return out;
  std::uint32_t prefix = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const std::uint32_t bit = 1u << (idx[p] - 1);
    const std::uint32_t suffix = m.mask() & ~prefix & ~bit;
    const Form &de = s.differentials[static_cast<std::size_t>(idx[p] - 1)];
    if (!de.is_zero()) {
      Form term = wedge(wedge(Form::monomial(dim, MultiIndex::from_mask(prefix)), de),
                        Form::monomial(dim, MultiIndex::from_mask(suffix)));
      if (p & 1) out -= term;
      else out += term;
    }
    prefix |= bit;
  }
  return out;
}

} // namespace

LieAlgebra LieAlgebra::build(StructureEquations structure) {
  const int m = structure.dim;
  if (static_cast<int>(structure.differentials.size()) != m)
    throw EntryCountMismatch("structure equations do not have one entry per generator");
  for (const auto &de : structure.differentials) {
    if (de.dim() != m) throw DimMismatch("structure equation of wrong dimension");
    if (!de.is_zero() && de.degree() != 2) throw MixedDegree("structure equation is not a 2-form");
  }

  LieAlgebra g;
  g.structure_ = std::move(structure);
  const auto &s = g.structure_;
  g.d_ = GradedOperator::from_function(m, 1, [&s](const Form &a) {
    Form out(a.dim(), std::min(a.degree() + 1, a.dim()));
    for (const auto &[mono, c] : a.terms()) out += differential_of_monomial(s, mono) * c;
    return out;
  });

  for (int k = 0; k + 2 <= m; ++k) {
    const QMatrix dd = g.d_.block(k + 1) * g.d_.block(k);
    for (std::size_t c = 0; c < dd.cols(); ++c) {
      for (std::size_t r = 0; r < dd.rows(); ++r) {
        if (dd(r, c).is_zero()) continue;
        const auto witness = monomial_basis(m, k)[c];
        const Form bad = g.differential(g.differential(Form::monomial(m, witness)));
        const std::string w = "e" + render_indices(witness, m);
        throw JacobiViolation("d∘d ≠ 0 in degree " + std::to_string(k) + ": d(d(" + w + ")) = " + bad.str(), k, w);
      }
    }
  }

  const auto mm = static_cast<std::size_t>(m);
  g.constants_.assign(mm * mm * mm, Rational());
  for (int k = 1; k <= m; ++k) {
    for (const auto &[pair, coef] : g.structure_.differentials[static_cast<std::size_t>(k - 1)].terms()) {
      const auto ij = pair.indices();
      const auto i = static_cast<std::size_t>(ij[0] - 1), j = static_cast<std::size_t>(ij[1] - 1);
      const auto kk = static_cast<std::size_t>(k - 1);
      g.constants_[(kk * mm + i) * mm + j] = -coef;
      g.constants_[(kk * mm + j) * mm + i] = coef;
    }
  }
  return g;
}

const Rational &LieAlgebra::structure_constant(int k, int i, int j) const {
  const auto m = static_cast<std::size_t>(dim());
  if (k < 1 || i < 1 || j < 1 || k > dim() || i > dim() || j > dim())
    throw IndexOutOfRange("structure constant index out of range");
  return constants_[((static_cast<std::size_t>(k) - 1) * m + static_cast<std::size_t>(i) - 1) * m +
                    static_cast<std::size_t>(j) - 1];
}

QVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const auto m = static_cast<std::size_t>(dim());
  if (x.size() != m || y.size() != m) throw DimMismatch("bracket of vectors of wrong length");
  QVector out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < m; ++k) {
        const Rational &c = constants_[(k * m + i) * m + j];
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(std::span<const Rational> x) const {
  const auto m = static_cast<std::size_t>(dim());
  QMatrix a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    QVector e(m);
    e[j] = 1;
    const QVector col = bracket(x, e);
    for (std::size_t k = 0; k < m; ++k) a(k, j) = col[k];
  }
  return a;
}

namespace {

Subspace bracket_span(const LieAlgebra &g, const Subspace &a, const Subspace &b) {
  std::vector<QVector> gens;
  const auto av = a.vectors();
  const auto bv = b.vectors();
  for (const auto &x : av)
    for (const auto &y : bv) gens.push_back(g.bracket(x, y));
  return Subspace::span(gens, static_cast<std::size_t>(g.dim()));
}

std::vector<Subspace> series(const LieAlgebra &g, bool derived) {
  const auto m = static_cast<std::size_t>(g.dim());
  const Subspace full = Subspace::full(m);
  std::vector<Subspace> out{full};
  while (true) {
    const Subspace &last = out.back();
    Subspace next = derived ? bracket_span(g, last, last) : bracket_span(g, full, last);
    if (next == last) break;
    out.push_back(std::move(next));
    if (out.back().is_zero()) break;
  }
  return out;
}

} // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra &g) { return series(g, false); }
std::vector<Subspace> derived_series(const LieAlgebra &g) { return series(g, true); }

LieProperties check_properties(const LieAlgebra &g) {
  LieProperties p;
  p.nilpotent = lower_central_series(g).back().is_zero();
  p.solvable = derived_series(g).back().is_zero();
  p.abelian = g.d().is_zero();
  p.unimodular = true;
  const int m = g.dim();
  for (int i = 1; i <= m && p.unimodular; ++i) {
    Rational trace;
    for (int k = 1; k <= m; ++k) trace += g.structure_constant(k, i, k);
    p.unimodular = trace.is_zero();
  }
  return p;
}

} // namespace lefschetz
