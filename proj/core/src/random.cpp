#include "lefschetz/random.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

SymplecticSample make_sample(const char *structure, const char *omega, const char *family) {
  SymplecticSample s;
  s.structure = parse_structure_equations(structure);
  s.omega = parse_form(omega, s.structure.dim, 2);
  s.family = family;
  return s;
}

Form embed(const Form &a, int dim) {
  Form out(dim, a.degree());
  for (const auto &[m, c] : a.terms()) out.add_term(m, c);
  return out;
}

Form shift_indices(const Form &a, int dim, int offset) {
  Form out(dim, a.degree());
  for (const auto &[m, c] : a.terms()) out.add_term(MultiIndex::from_mask(m.mask() << offset), c);
  return out;
}

bool nondegenerate(const Form &omega) {
  const int n = omega.dim() / 2;
  Form power = Form::scalar(omega.dim(), 1);
  for (int i = 0; i < n; ++i) power = wedge(power, omega);
  return !top_coefficient(power).is_zero();
}

} // namespace

Form substitute(const Form &a, const QMatrix &b) {
  const int dim = a.dim();
  std::vector<Form> images;
  for (int j = 0; j < dim; ++j) {
    Form img(dim, 1);
    for (int l = 0; l < dim; ++l)
      img.add_term(MultiIndex::from_indices({l + 1}), b(static_cast<std::size_t>(j), static_cast<std::size_t>(l)));
    images.push_back(std::move(img));
  }
  Form out(dim, a.degree());
  for (const auto &[m, c] : a.terms()) {
    Form term = Form::scalar(dim, c);
    for (int i : m.indices()) term = wedge(term, images[static_cast<std::size_t>(i - 1)]);
    out += term;
  }
  return out;
}

SymplecticSample change_basis(const SymplecticSample &sample, const QMatrix &a) {
  const int dim = sample.structure.dim;
  const QMatrix b = inverse(a);
  SymplecticSample out;
  out.structure.dim = dim;
  out.family = sample.family;
  // d f^i = Σ_j a(i,j) d e^j, then rewritten in the f coframe.
  for (int i = 0; i < dim; ++i) {
    Form df(dim, 2);
    for (int j = 0; j < dim; ++j) {
      const Rational &c = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!c.is_zero()) df += sample.structure.differentials[static_cast<std::size_t>(j)] * c;
    }
    out.structure.differentials.push_back(substitute(df, b));
  }
  out.structure.source_text = out.structure.str();
  out.omega = substitute(sample.omega, b);
  return out;
}

SymplecticSample direct_sum(const SymplecticSample &a, const SymplecticSample &b) {
  const int da = a.structure.dim;
  const int dim = da + b.structure.dim;
  SymplecticSample out;
  out.structure.dim = dim;
  for (const auto &f : a.structure.differentials) out.structure.differentials.push_back(embed(f, dim));
  for (const auto &f : b.structure.differentials) out.structure.differentials.push_back(shift_indices(f, dim, da));
  out.structure.source_text = out.structure.str();
  out.omega = embed(a.omega, dim) + shift_indices(b.omega, dim, da);
  out.family = a.family + "+" + b.family;
  return out;
}

std::vector<SymplecticSample> seed_samples(int dim) {
  switch (dim) {
  case 4:
    return {make_sample("0,12,-13,0", "14+23", "solvable"), make_sample("0,0,0,12", "13+24", "nilpotent")};
  case 6:
    return {make_sample("-13,23,0,-56,46,0", "12+36+45", "solvable"),
            make_sample("-23,0,0,-46,56,0", "12+36+45", "solvable"),
            make_sample("0,12-45,-13+46,0,15-24,-16+34", "14+35+62", "solvable"),
            make_sample("0,0,0,12,14-23,15+34", "16+35+24", "nilpotent")};
  default:
    return {};
  }
}

int SampleGenerator::small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

std::optional<Form> SampleGenerator::closed_symplectic_form(const LieAlgebra &g, int attempts) {
  const int dim = g.dim();
  if (dim % 2 != 0) return std::nullopt;
  const auto closed = kernel(g.d().block(2)).vectors();
  if (closed.empty()) return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    QVector v(binomial(dim, 2));
    for (const auto &z : closed) {
      const Rational c(small_int(-2, 2));
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * z[i];
    }
    Form omega = Form::from_coordinates(dim, 2, v);
    if (nondegenerate(omega)) return omega;
  }
  return std::nullopt;
}

StructureEquations SampleGenerator::nilpotent(int dim) {
  if (dim < 3) throw InputError("nilpotent non-abelian algebras need dimension at least 3");
  const int closed_generators = small_int(2, std::max(2, dim / 2));
  StructureEquations s;
  s.dim = dim;
  for (int k = 0; k < closed_generators; ++k) s.differentials.emplace_back(dim, 2);
  bool non_abelian = false;
  for (int k = closed_generators; k < dim; ++k) {
    StructureEquations partial;
    partial.dim = k;
    for (const auto &f : s.differentials) {
      Form restricted(k, 2);
      for (const auto &[m, c] : f.terms()) restricted.add_term(m, c);
      partial.differentials.push_back(std::move(restricted));
    }
    const auto cocycles = kernel(LieAlgebra::build(partial).d().block(2)).vectors();
    QVector v(binomial(k, 2));
    for (const auto &z : cocycles) {
      const Rational c(small_int(-1, 1));
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * z[i];
    }
    Form de = embed(Form::from_coordinates(k, 2, v), dim);
    if (!non_abelian && k + 1 == dim && de.is_zero() && !cocycles.empty())
      de = embed(Form::from_coordinates(k, 2, cocycles.front()), dim);
    non_abelian = non_abelian || !de.is_zero();
    s.differentials.push_back(std::move(de));
  }
  s.source_text = s.str();
  return s;
}

QMatrix SampleGenerator::unimodular_matrix(int dim) {
  const auto m = static_cast<std::size_t>(dim);
  QMatrix a = QMatrix::identity(m);
  const int steps = dim;
  for (int t = 0; t < steps; ++t) {
    const auto i = static_cast<std::size_t>(small_int(0, dim - 1));
    auto j = static_cast<std::size_t>(small_int(0, dim - 2));
    if (j >= i) ++j;
    const Rational c(small_int(0, 1) ? 1 : -1);
    for (std::size_t col = 0; col < m; ++col) a(i, col) += c * a(j, col);
  }
  return a;
}

std::optional<SymplecticSample> SampleGenerator::nilpotent_sample(int dim) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    SymplecticSample s;
    s.structure = nilpotent(dim);
    const LieAlgebra g = LieAlgebra::build(s.structure);
    if (auto omega = closed_symplectic_form(g)) {
      s.omega = std::move(*omega);
      s.family = "nilpotent";
      return s;
    }
  }
  return std::nullopt;
}

SymplecticSample SampleGenerator::seed_sample(int dim) {
  if (dim == 8) {
    const auto fours = seed_samples(4);
    const auto &a = fours[static_cast<std::size_t>(small_int(0, static_cast<int>(fours.size()) - 1))];
    const auto &b = fours[static_cast<std::size_t>(small_int(0, static_cast<int>(fours.size()) - 1))];
    return direct_sum(a, b);
  }
  const auto seeds = seed_samples(dim);
  if (seeds.empty()) throw InputError("no seed algebras in dimension " + std::to_string(dim));
  return seeds[static_cast<std::size_t>(small_int(0, static_cast<int>(seeds.size()) - 1))];
}

SymplecticSample SampleGenerator::sample(int dim) {
  if (dim != 4 && dim != 6 && dim != 8) throw InputError("random samples are available in dimensions 4, 6 and 8");
  if (small_int(0, 1) == 0) {
    if (auto s = nilpotent_sample(dim)) return *s;
  }
  SymplecticSample base = seed_sample(dim);
  const LieAlgebra g = LieAlgebra::build(base.structure);
  if (auto omega = closed_symplectic_form(g)) base.omega = std::move(*omega);
  return change_basis(base, unimodular_matrix(dim));
}

} // namespace lefschetz
