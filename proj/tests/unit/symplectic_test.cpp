#include "lefschetz/errors.hpp"
#include "lefschetz/symplectic.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace lefschetz {
namespace {

using testing::form;

const char *const kExample1 = "0,0,0,12,14-23,15+34";
const char *const kExample1Omega = "16+35+24";

TEST(Validate, RejectsOddDimension) {
  EXPECT_THROW(SymplecticStructure::validate(testing::algebra("0,0,12"), form("12", 3)), OddDimension);
}

TEST(Validate, RejectsNonClosedForm) {
  // d(e^15) = −e^1 ∧ (e^14 − e^23) = e^123
  try {
    testing::structure(kExample1, "15+16+35+24");
    FAIL() << "expected NotClosed";
  } catch (const NotClosed &e) {
    EXPECT_EQ(e.error_class(), ErrorClass::validation);
  }
}

TEST(Validate, RejectsDegenerateForm) {
  EXPECT_THROW(testing::structure("0^4", "12"), Degenerate);
  EXPECT_THROW(testing::structure("0^4", "12+13"), Degenerate);
}

TEST(Validate, RejectsWrongDegree) {
  EXPECT_THROW(SymplecticStructure::validate(testing::algebra("0^4"), form("123", 4)), InputError);
}

TEST(Validate, FlippedPoissonSignFailsSelfCheck) {
  try {
    SymplecticStructure::validate(testing::algebra(kExample1), form(kExample1Omega, 6), PoissonSign::flipped);
    FAIL() << "expected the Λω self-check to fail";
  } catch (const InternalInconsistency &e) {
    EXPECT_NE(std::string(e.what()).find("Λω"), std::string::npos) << e.what();
  }
}

TEST(Operators, LambdaOfOmegaIsN) {
  for (const auto &m : corpus()) {
    const auto s = testing::corpus_structure(m.name);
    EXPECT_EQ(op_Lambda(s, s.omega()), Form::scalar(s.dim(), Rational(s.n()))) << m.name;
  }
}

TEST(Operators, HActsByDegreeShift) {
  const auto s = testing::structure(kExample1, kExample1Omega);
  std::mt19937_64 rng(71);
  for (int k = 0; k <= 6; ++k) {
    const Form a = testing::random_form(rng, 6, k);
    EXPECT_EQ(op_H(s, a), a * Rational(s.n() - k)) << "degree " << k;
  }
}

TEST(Operators, PoissonBivectorConvention) {
  // ω = e^12 on R^2: W = [[0,1],[−1,0]], Π = −W^{-1} = W.
  const auto s = testing::structure("0,0", "12");
  EXPECT_EQ(s.poisson().coefficient(1, 2), Rational(1));
  EXPECT_EQ(s.volume(), Rational(1));
}

TEST(Operators, IdentitiesHoldOnCorpus) {
  for (const auto &m : corpus()) {
    const auto s = testing::corpus_structure(m.name);
    for (const auto &check : operator_identities(s)) EXPECT_TRUE(check.holds) << m.name << ": " << check.name;
  }
}

TEST(Operators, DLambdaSquaresToZeroAndAnticommutesWithD) {
  const auto s = testing::corpus_structure("example3");
  std::mt19937_64 rng(73);
  for (int k = 0; k <= 6; ++k) {
    const Form a = testing::random_form(rng, 6, k);
    if (k >= 2) {
      EXPECT_TRUE(d_lambda(s, d_lambda(s, a)).is_zero());
    }
    if (k >= 1) {
      EXPECT_EQ(s.algebra().differential(d_lambda(s, a)), -d_lambda(s, s.algebra().differential(a)));
    }
  }
}

TEST(Star, TwoDimensionalValues) {
  const auto s = testing::structure("0,0", "12");
  EXPECT_EQ(symplectic_star(s, Form::scalar(2, 1)), form("12", 2));
  EXPECT_EQ(symplectic_star(s, form("12", 2)), Form::scalar(2, 1));
  EXPECT_EQ(symplectic_star(s, form("1", 2)), form("1", 2));
  EXPECT_EQ(symplectic_star(s, form("2", 2)), form("2", 2));
}

TEST(Star, DefiningRelationOnSeededForms) {
  for (const char *name : {"example1", "example4", "torus6"}) {
    const auto s = testing::corpus_structure(name);
    Form vol = s.omega();
    for (int i = 1; i < s.n(); ++i) vol = wedge(vol, s.omega());
    vol = vol * (Rational(1) / factorial(static_cast<unsigned>(s.n())));
    std::mt19937_64 rng(79);
    for (int k = 0; k <= 6; ++k) {
      const Form a = testing::random_form(rng, 6, k);
      const Form b = testing::random_form(rng, 6, k);
      EXPECT_EQ(wedge(a, symplectic_star(s, b)), vol * s.pairing(a, b)) << name << " degree " << k;
    }
    EXPECT_TRUE(s.star().is_involution());
  }
}

TEST(Primitive, DimensionsMatchBinomialCount) {
  for (const char *name : {"example1", "example2", "torus6"}) {
    const auto s = testing::corpus_structure(name);
    for (int k = 0; k <= 6; ++k) {
      const std::size_t expected = k <= 3 ? binomial(6, k) - (k >= 2 ? binomial(6, k - 2) : 0) : 0;
      EXPECT_EQ(s.primitive(k).dim(), expected) << name << " degree " << k;
    }
  }
}

TEST(Primitive, KernelOfLambdaEqualsKernelOfLPower) {
  const auto s = testing::corpus_structure("example4");
  for (int k = 0; k <= s.n(); ++k) EXPECT_EQ(s.primitive(k), kernel(s.L_power(s.n() - k + 1).block(k))) << k;
}

struct Expected {
  std::string form;
  std::string primitive;
  std::string l_part;
};

void expect_decomposition(const SymplecticStructure &s, const Expected &e) {
  const Form a = form(e.form, s.dim());
  const auto c = lefschetz_decompose(s, a);
  EXPECT_TRUE(c.formula_agrees) << e.form;
  EXPECT_EQ(c.component(0), form(e.primitive, s.dim())) << e.form;
  EXPECT_EQ(c.component(1), form(e.l_part, s.dim())) << e.form;
  EXPECT_TRUE(op_Lambda(s, c.component(0)).is_zero());
  EXPECT_EQ(lefschetz_reassemble(s, c), a);
}

TEST(LefschetzDecomposition, NilmanifoldHarmonicRepresentatives) {
  const auto s = testing::structure(kExample1, kExample1Omega);
  expect_decomposition(s, {"126-145-2*235", "-1/2*126-1/2*235-145", "-3/2*2"});
  expect_decomposition(s, {"136", "1/2*136-1/2*234", "-1/2*3"});
  expect_decomposition(s, {"146+1/2*236+1/2*345", "1/4*146-1/4*345+1/2*236", "-3/4*4"});
  expect_decomposition(s, {"245", "1/2*156+1/2*245", "1/2*5"});
}

TEST(LefschetzDecomposition, CompletelySolvableExample) {
  const auto s = testing::corpus_structure("example3");
  expect_decomposition(s, {"136", "1/2*136-1/2*145", "1/2*1"});
}

TEST(LefschetzDecomposition, FormulaMatchesSolverOnSeededForms) {
  std::mt19937_64 rng(83);
  for (const char *name : {"example1", "example2", "torus6"}) {
    const auto s = testing::corpus_structure(name);
    for (int k = 0; k <= 6; ++k) {
      const Form a = testing::random_form(rng, 6, k);
      const auto by_formula = lefschetz_decompose(s, a);
      const auto by_solve = lefschetz_decompose_by_solve(s, a);
      EXPECT_TRUE(by_formula.formula_agrees);
      EXPECT_EQ(by_formula.components, by_solve.components) << name << " degree " << k;
      EXPECT_EQ(lefschetz_reassemble(s, by_formula), a);
    }
  }
}

TEST(LefschetzCoefficient, RangeAndKnownValue) {
  EXPECT_THROW(lefschetz_coefficient(0, 0, 3, 5), InputError);
  EXPECT_THROW(lefschetz_coefficient(0, -1, 3, 2), InputError);
  // n = 1, k = 0, r = 0, ℓ = 0: (−1)^0 · 2² · (1/2) · (1/2) = 1
  EXPECT_EQ(lefschetz_coefficient(0, 0, 1, 0), Rational(1));
  // n = 3, k = 2, r = 1, ℓ = 1: −4² · 1/(4·3) · 1/(4·5) = −1/15
  EXPECT_EQ(lefschetz_coefficient(1, 1, 3, 2), Rational(-1, 15));
}

} // namespace
} // namespace lefschetz
