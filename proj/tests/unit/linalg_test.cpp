#include "lefschetz/errors.hpp"
#include "lefschetz/linalg.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace lefschetz {
namespace {

QMatrix rows(std::initializer_list<std::initializer_list<long>> entries) {
  std::vector<QVector> out;
  std::size_t cols = 0;
  for (const auto &r : entries) {
    QVector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    out.push_back(std::move(v));
  }
  return QMatrix::from_rows(out, cols);
}

// Textbook Gauss–Jordan over Q: first non-zero pivot, rational row operations.
QMatrix naive_rref(QMatrix a) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pr, j));
    const Rational p = a(pr, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(pr, j) /= p;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pr) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= f * a(pr, j);
    }
    ++pr;
  }
  return a;
}

// Leibniz expansion over all permutations.
Rational leibniz_determinant(const QMatrix &m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Rref, KnownMatrix) {
  const auto r = rref(rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.reduced, rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RationalEntries) {
  QMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(1, 4);
  m(1, 1) = Rational(1, 6);
  const auto r = rref(m);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced(0, 1), Rational(2, 3));
}

TEST(Rref, MatchesNaiveEliminationOnSeededMatrices) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + static_cast<std::size_t>(rng() % 7);
    const std::size_t c = 1 + static_cast<std::size_t>(rng() % 7);
    QMatrix m = testing::random_matrix(rng, r, c, 4, 0.4);
    if (r > 2) // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(3, 2) - m(1, j);
    EXPECT_EQ(rref(m).reduced, naive_rref(m)) << m.str();
  }
}

TEST(Kernel, SingleRow) {
  const QMatrix m = rows({{1, 1, 0}});
  const Subspace k = kernel(m);
  EXPECT_EQ(k.dim(), 2u);
  for (const auto &v : k.vectors()) EXPECT_TRUE(is_zero_vector(m.apply(v)));
}

TEST(Kernel, RankNullity) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const QMatrix m = testing::random_matrix(rng, 4, 6, 3, 0.5);
    const Subspace k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), 6u);
    for (const auto &v : k.vectors()) EXPECT_TRUE(is_zero_vector(m.apply(v)));
    EXPECT_EQ(image(m).dim(), rank(m));
  }
}

TEST(Subspace, CanonicalBasisIdentifiesEqualSpans) {
  const Subspace a = Subspace::span(rows({{1, 1, 0}, {0, 1, 1}}));
  const Subspace b = Subspace::span(rows({{1, 2, 1}, {1, 0, -1}}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), rows({{1, 0, -1}, {0, 1, 1}}));
  EXPECT_EQ(Subspace::span(rows({{0, 0, 0}})).dim(), 0u);
}

TEST(Subspace, ContainsAgreesWithAugmentedRank) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const QMatrix gens = testing::random_matrix(rng, 3, 6, 2, 0.3);
    const Subspace s = Subspace::span(gens);
    QMatrix v = testing::random_matrix(rng, 1, 6, 2, 0.3);
    if (t % 2 == 0) v = rows({{2, -1, 1}}) * gens;
    const bool by_rank = rank(gens.stacked(v)) == rank(gens);
    EXPECT_EQ(s.contains(v.row(0)), by_rank);
  }
}

TEST(Subspace, IntersectionSatisfiesGrassmannFormula) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const Subspace a = Subspace::span(testing::random_matrix(rng, 1 + rng() % 4, 6, 2, 0.4));
    const Subspace b = Subspace::span(testing::random_matrix(rng, 1 + rng() % 4, 6, 2, 0.4));
    const Subspace meet = subspace_intersect(a, b);
    const Subspace join = subspace_sum(a, b);
    EXPECT_EQ(meet.dim() + join.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(meet));
    EXPECT_TRUE(b.contains(meet));
    EXPECT_TRUE(join.contains(a));
    EXPECT_TRUE(join.contains(b));
  }
}

TEST(Subspace, ModularLaw) {
  // a ⊆ c ⇒ a + (b ∩ c) = (a + b) ∩ c
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    const Subspace c = Subspace::span(testing::random_matrix(rng, 4, 6, 2, 0.3));
    if (c.is_zero()) continue;
    const Subspace a = Subspace::span(std::vector<QVector>{c.basis().row_vector(0)}, 6);
    const Subspace b = Subspace::span(testing::random_matrix(rng, 3, 6, 2, 0.3));
    EXPECT_EQ(subspace_sum(a, subspace_intersect(b, c)), subspace_intersect(subspace_sum(a, b), c));
  }
}

TEST(Subspace, ZeroAndFullShortcuts) {
  const Subspace z = Subspace::zero(4);
  const Subspace f = Subspace::full(4);
  const Subspace s = Subspace::span(rows({{1, 2, 0, 0}}));
  EXPECT_EQ(subspace_intersect(z, s), z);
  EXPECT_EQ(subspace_intersect(f, s), s);
  EXPECT_EQ(subspace_sum(z, s), s);
  EXPECT_EQ(subspace_sum(f, s), f);
}

TEST(Subspace, OrthogonalComplement) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Subspace s = Subspace::span(testing::random_matrix(rng, 3, 7, 3, 0.3));
    const Subspace c = orthogonal_complement(s);
    EXPECT_EQ(s.dim() + c.dim(), 7u);
    for (const auto &u : s.vectors())
      for (const auto &v : c.vectors()) EXPECT_TRUE(dot(u, v).is_zero());
  }
}

TEST(Inverse, ProductIsIdentity) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const QMatrix m = testing::random_matrix(rng, 4, 4, 4, 0.2);
    if (rank(m) < 4) {
      EXPECT_THROW(inverse(m), InternalInconsistency);
      continue;
    }
    EXPECT_EQ(m * inverse(m), QMatrix::identity(4));
    EXPECT_EQ(inverse(m) * m, QMatrix::identity(4));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Determinant, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    const QMatrix m = testing::random_matrix(rng, n, n, 4, 0.3);
    EXPECT_EQ(determinant(m), leibniz_determinant(m));
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  const QMatrix m = rows({{1, 1}, {1, -1}, {2, 0}});
  const QVector b{Rational(3), Rational(1), Rational(4)};
  const auto x = solve(m, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), b);
  const QVector bad{Rational(3), Rational(1), Rational(5)};
  EXPECT_FALSE(solve(m, bad).has_value());
}

TEST(MatrixProduct, AssociativeAndMatchesApply) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = testing::random_matrix(rng, 3, 4);
    const QMatrix b = testing::random_matrix(rng, 4, 5);
    const QMatrix c = testing::random_matrix(rng, 5, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const QVector x = testing::random_matrix(rng, 5, 1).column(0);
    EXPECT_EQ((a * b).apply(x), a.apply(b.apply(x)));
  }
  EXPECT_THROW(QMatrix(2, 3) * QMatrix(2, 3), DimMismatch);
}

TEST(Quotient, CoordinatesVanishExactlyOnDenominator) {
  const Subspace v = Subspace::span(rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  const Subspace w = Subspace::span(rows({{1, 1, 0, 0}}));
  const QuotientStructure q(w, v);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(is_zero_vector(q.coordinates(w.basis().row(0))));
  const QVector x{Rational(1), Rational(0), Rational(0), Rational(0)};
  EXPECT_FALSE(is_zero_vector(q.coordinates(x)));
  const QVector coords{Rational(2), Rational(-3)};
  EXPECT_EQ(q.coordinates(q.lift(coords)), coords);
  const QVector outside{Rational(0), Rational(0), Rational(0), Rational(1)};
  EXPECT_THROW(q.coordinates(outside), NotSubspace);
}

} // namespace
} // namespace lefschetz
