#pragma once

#include "lefschetz/cohomology.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/symplectic.hpp"

#include <random>
#include <string>

namespace lefschetz::testing {

inline LieAlgebra algebra(const std::string &structure) { return LieAlgebra::build(parse_structure_equations(structure)); }

inline Form form(const std::string &text, int dim) { return parse_form(text, dim); }

inline SymplecticStructure structure(const std::string &equations, const std::string &omega) {
  LieAlgebra g = algebra(equations);
  const int dim = g.dim();
  return SymplecticStructure::validate(std::move(g), parse_form(omega, dim, 2));
}

inline SymplecticStructure corpus_structure(const std::string &name) {
  const auto m = find_corpus_model(name);
  if (!m) throw InputError("unknown corpus model " + name);
  return structure(m->structure, m->omega);
}

inline Rational random_rational(std::mt19937_64 &rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  return Rational(num(rng), den(rng));
}

inline QMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int range = 3,
                             double zero_fraction = 0.3) {
  std::bernoulli_distribution zero(zero_fraction);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!zero(rng)) m(r, c) = random_rational(rng, range);
  return m;
}

inline Form random_form(std::mt19937_64 &rng, int dim, int k, int range = 3) {
  std::uniform_int_distribution<int> coeff(-range, range);
  QVector v(binomial(dim, k));
  for (auto &c : v) c = Rational(coeff(rng));
  return Form::from_coordinates(dim, k, v);
}

} // namespace lefschetz::testing
