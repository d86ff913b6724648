#pragma once

#include "lefschetz/lie.hpp"
#include "lefschetz/symplectic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace lefschetz {

/// A Lie algebra together with a closed non-degenerate 2-form.
struct SymplecticSample {
  StructureEquations structure;
  Form omega;
  std::string family;
};

/// The form obtained by substituting e^j ↦ Σ_l b(j,l) f^l.
Form substitute(const Form &a, const QMatrix &b);

/// Structure equations and ω in the coframe f = A e, for an invertible A.
SymplecticSample change_basis(const SymplecticSample &sample, const QMatrix &a);

/// g₁ ⊕ g₂ with ω₁ + ω₂; the generators of the second summand are renumbered after the first.
SymplecticSample direct_sum(const SymplecticSample &a, const SymplecticSample &b);

/// Seeded generator of symplectic Lie algebras for property tests.
class SampleGenerator {
public:
  explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

  /// A random closed 2-form with ω^n ≠ 0, or nullopt if none was found.
  std::optional<Form> closed_symplectic_form(const LieAlgebra &g, int attempts = 40);

  /// Iterated central extension of an abelian algebra: each d e^k is a random
  /// closed 2-form in e^1 … e^{k−1}. Nilpotent, never abelian.
  StructureEquations nilpotent(int dim);

  /// Integer matrix with determinant ±1 built from elementary row operations.
  QMatrix unimodular_matrix(int dim);

  /// One sample of even dimension 4, 6 or 8, mixing nilpotent extensions,
  /// basis changes of solvable seeds, and direct sums.
  SymplecticSample sample(int dim);

  std::mt19937_64 &engine() { return rng_; }

private:
  int small_int(int lo, int hi);
  std::optional<SymplecticSample> nilpotent_sample(int dim);
  SymplecticSample seed_sample(int dim);

  std::mt19937_64 rng_;
};

/// The fixed solvable, unimodular symplectic algebras used as seeds, by dimension.
std::vector<SymplecticSample> seed_samples(int dim);

} // namespace lefschetz
