#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ein/errors.hpp"
#include "ein/graded_poly.hpp"
#include "oracles/naive_poly.hpp"

namespace ein {
namespace {

const PrimeField kField(32003);

HomogeneousForm x(int var, int power = 1) {
  Exponents e{0, 0, 0, 0};
  e[var] = power;
  return HomogeneousForm::monomial(e);
}

TEST(DimFormsTest, SmallDegrees) {
  EXPECT_EQ(dim_forms(0), 1u);
  EXPECT_EQ(dim_forms(1), 4u);
  EXPECT_EQ(dim_forms(2), 10u);
  EXPECT_EQ(dim_forms(-1), 0u);
  EXPECT_EQ(dim_forms(-7), 0u);
}

TEST(DimFormsTest, MatchesBasisSize) {
  for (int d = 0; d <= 24; ++d) EXPECT_EQ(dim_forms(d), MonomialBasis(d).size()) << d;
  EXPECT_EQ(MonomialBasis(-2).size(), 0u);
}

TEST(EulerCharTest, Values) {
  EXPECT_EQ(euler_char_line_bundle(0), 1);
  EXPECT_EQ(euler_char_line_bundle(-4), -1);
  EXPECT_EQ(euler_char_line_bundle(3), 20);
}

TEST(EulerCharTest, LineBundleCohomology) {
  for (int d = -30; d <= 30; ++d) {
    const auto chi = euler_char_line_bundle(d);
    if (d >= 0) {
      EXPECT_EQ(chi, static_cast<std::int64_t>(dim_forms(d)));
    } else if (d <= -4) {
      EXPECT_EQ(chi, -static_cast<std::int64_t>(dim_forms(-d - 4)));  // h3 by duality
    } else {
      EXPECT_EQ(chi, 0);
    }
  }
}

TEST(MonomialBasisTest, GradedLexOrder) {
  const MonomialBasis b(2);
  const std::vector<Exponents> expected{{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0},
                                        {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}};
  EXPECT_EQ(b.monomials(), expected);
}

TEST(MonomialBasisTest, IndexOfInvertsEnumeration) {
  for (int d = 0; d <= 12; ++d) {
    const MonomialBasis b(d);
    std::set<Exponents> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(MonomialBasis::index_of(b[i]), i);
      int sum = 0;
      for (int v : b[i]) sum += v;
      EXPECT_EQ(sum, d);
      seen.insert(b[i]);
      if (i > 0) EXPECT_GT(b[i - 1], b[i]);  // strictly descending lex
    }
    EXPECT_EQ(seen.size(), b.size());
  }
}

TEST(MultMapTest, LinearFormOnConstants) {
  const FpMatrix m = mult_map(x(0), 0, kField);
  ASSERT_EQ(m.rows(), 4u);
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m(0, 0), 1u);
  EXPECT_EQ(m(1, 0) + m(2, 0) + m(3, 0), 0u);
}

TEST(MultMapTest, ConstantOneIsIdentity) {
  EXPECT_EQ(mult_map(HomogeneousForm::constant(1), 2, kField), FpMatrix::identity(10));
}

TEST(MultMapTest, NegativeSourceDegree) {
  const FpMatrix m = mult_map(x(0, 3), -2, kField);
  EXPECT_EQ(m.rows(), dim_forms(1));
  EXPECT_EQ(m.cols(), 0u);
  EXPECT_EQ(mult_map(x(0), -2, kField).rows(), 0u);
}

TEST(MultMapTest, QuadricOnLinearFormsIsInjective) {
  const auto f = HomogeneousForm::from_terms(2, {{1, {2, 0, 0, 0}}, {1, {0, 1, 1, 0}}}, kField);
  const FpMatrix m = mult_map(f, 1, kField);
  const FpMatrix expected = oracle::naive_mult_map(f, 1, kField.p());
  EXPECT_EQ(m, expected);
  EXPECT_EQ(rank(m, kField), 4u);
  EXPECT_EQ(oracle::naive_rank(expected, kField.p()), 4u);
}

TEST(MultMapTest, AgreesWithBruteForceExpansion) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int d = static_cast<int>(seed % 4);
    const int src = static_cast<int>(seed % 3);
    const auto f = random_form(d, seed, kField);
    EXPECT_EQ(mult_map(f, src, kField), oracle::naive_mult_map(f, src, kField.p()));
  }
}

TEST(MultMapTest, CompositionIsMultiplicationByProduct) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = random_form(1 + seed % 2, seed, kField);
    const auto g = random_form(1 + seed % 3, seed + 100, kField);
    const int s = static_cast<int>(seed % 3);
    const FpMatrix composed = multiply(mult_map(g, s + f.degree, kField), mult_map(f, s, kField), kField);
    EXPECT_EQ(composed, mult_map(multiply(f, g, kField), s, kField));
  }
}

TEST(MultMapTest, NonzeroFormIsInjective) {
  for (std::uint64_t seed = 0; seed < 14; ++seed) {
    const int d = 1 + static_cast<int>(seed % 3);
    const int src = static_cast<int>(seed % 7);
    const auto f = random_form(d, seed * 31 + 1, kField);
    ASSERT_FALSE(f.is_zero());
    EXPECT_EQ(kernel_dim(mult_map(f, src, kField), kField), 0u) << "d=" << d << " src=" << src;
  }
  // Sparse nonzero forms too.
  EXPECT_EQ(kernel_dim(mult_map(x(3, 2), 6, kField), kField), 0u);
}

TEST(ProductTest, MatchesSparseOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_form(2, seed, kField);
    const auto g = random_form(3, seed + 50, kField);
    EXPECT_EQ(oracle::to_sparse(multiply(f, g, kField)),
              oracle::product(oracle::to_sparse(f), oracle::to_sparse(g), kField.p()));
  }
}

TEST(RandomFormTest, GoldenDegreeTwoSeed42) {
  const auto f = random_form(2, 42, kField);
  const std::vector<Residue> golden{22552, 1430, 26780, 30939, 8484, 17101, 30590, 7854, 3540, 30884};
  EXPECT_EQ(f.degree, 2);
  EXPECT_EQ(f.coeffs, golden);
}

TEST(RandomFormTest, SeedDeterminism) {
  EXPECT_EQ(random_form(3, 9, kField), random_form(3, 9, kField));
  EXPECT_NE(random_form(3, 9, kField), random_form(3, 10, kField));
  std::set<std::vector<Residue>> distinct;
  for (std::uint64_t s = 0; s < 50; ++s) distinct.insert(random_form(2, s, kField).coeffs);
  EXPECT_EQ(distinct.size(), 50u);
}

TEST(RandomFormTest, ConstantIsNonzeroForMostSeeds) {
  int zeros = 0;
  for (std::uint64_t s = 0; s < 200; ++s) zeros += random_form(0, s, kField).is_zero() ? 1 : 0;
  EXPECT_LE(zeros, 1);
}

TEST(RandomFormTest, ResiduesAreReduced) {
  const PrimeField small(5);
  const auto f = random_form(6, 3, small);
  for (Residue c : f.coeffs) EXPECT_LT(c, 5u);
}

TEST(PartialsTest, Monomials) {
  const auto d = partials(x(0, 2), kField);
  EXPECT_EQ(d[0], scale(x(0), 2, kField));
  EXPECT_TRUE(d[1].is_zero() && d[2].is_zero() && d[3].is_zero());

  const auto x0x1 = HomogeneousForm::monomial({1, 1, 0, 0});
  const auto g = partials(x0x1, kField);
  EXPECT_EQ(g[0], x(1));
  EXPECT_EQ(g[1], x(0));
  EXPECT_TRUE(g[2].is_zero() && g[3].is_zero());
}

TEST(PartialsTest, DegreeZeroIsRejected) {
  try {
    partials(HomogeneousForm::constant(3), kField);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "non-differentiable degree");
  }
}

TEST(PartialsTest, EulerIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int d = 1 + static_cast<int>(seed % 6);
    const auto f = random_form(d, seed, kField);
    const auto grad = partials(f, kField);
    HomogeneousForm sum = HomogeneousForm::zero(d);
    for (int v = 0; v < kNumVars; ++v) sum = add(sum, multiply(x(v), grad[v], kField), kField);
    EXPECT_EQ(sum, scale(f, static_cast<Residue>(d), kField));
  }
}

TEST(EvaluateTest, FermatCubic) {
  const auto f = HomogeneousForm::from_terms(
      3, {{1, {3, 0, 0, 0}}, {1, {0, 3, 0, 0}}, {1, {0, 0, 3, 0}}, {1, {0, 0, 0, 3}}}, kField);
  EXPECT_EQ(evaluate(f, {1, 2, 0, 0}, kField), 9u);
  EXPECT_EQ(evaluate(f, {1, kField.p() - 1, 0, 0}, kField), 0u);
}

TEST(FormJsonTest, RoundTrip) {
  const auto f = random_form(3, 77, kField);
  const nlohmann::json j = to_json(f);
  EXPECT_EQ(j.at("degree"), 3);
  EXPECT_EQ(j.at("coeffs").size(), 20u);
  EXPECT_EQ(form_from_json(j, kField), f);
  EXPECT_THROW(form_from_json(nlohmann::json{{"degree", 2}, {"coeffs", {1, 2}}}, kField), PreconditionError);
}

TEST(FromTermsTest, RejectsWrongDegree) {
  EXPECT_THROW(HomogeneousForm::from_terms(2, {{1, {1, 0, 0, 0}}}, kField), PreconditionError);
}

}  // namespace
}  // namespace ein
