#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ein/errors.hpp"
#include "ein/fp_matrix.hpp"
#include "oracles/naive_poly.hpp"

namespace ein {
namespace {

FpMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::mt19937_64& gen,
                       int planted_rank = -1) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  if (planted_rank < 0) {
    FpMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(gen);
    return m;
  }
  // Product of rows x k and k x cols factors: rank at most k.
  const auto k = static_cast<std::size_t>(planted_rank);
  FpMatrix left(rows, k), right(k, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < k; ++c) left(r, c) = dist(gen);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < cols; ++c) right(r, c) = dist(gen);
  return multiply(left, right, PrimeField(p));
}

TEST(PrimeFieldTest, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(2), PreconditionError);
  EXPECT_THROW(PrimeField(9), PreconditionError);
  EXPECT_THROW(PrimeField(32001), PreconditionError);
  EXPECT_NO_THROW(PrimeField(32003));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeFieldTest, ArithmeticIdentities) {
  const PrimeField f(32003);
  EXPECT_EQ(f.reduce(-1), 32002u);
  EXPECT_EQ(f.reduce(32003 * 5 + 7), 7u);
  for (Residue x : {1u, 2u, 17u, 32002u}) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
  EXPECT_THROW(f.inv(0), PreconditionError);
  EXPECT_EQ(f.sub(3, 5), 32001u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(RankTest, ZeroDimensional) {
  const PrimeField f(7);
  const FpMatrix m(0, 5);
  EXPECT_EQ(rank(m, f), 0u);
  EXPECT_EQ(kernel_dim(m, f), 5u);
  EXPECT_EQ(cokernel_dim(FpMatrix(5, 0), f), 5u);
}

TEST(RankTest, Identity) {
  const PrimeField f(7);
  const auto id = FpMatrix::identity(3);
  EXPECT_EQ(rank(id, f), 3u);
  EXPECT_EQ(kernel_dim(id, f), 0u);
  EXPECT_EQ(cokernel_dim(id, f), 0u);
}

TEST(RankTest, ProportionalRows) {
  const PrimeField f(7);
  const auto m = FpMatrix::from_rows({{1, 2}, {2, 4}}, f);
  EXPECT_EQ(rank(m, f), 1u);
  EXPECT_EQ(kernel_dim(m, f), 1u);
  EXPECT_EQ(cokernel_dim(m, f), 1u);
}

TEST(RankTest, DependsOnCharacteristic) {
  // det = 1*4 - 2*3 = -2, singular only mod 2; [[1,1],[1,-1]] has det -2 too.
  EXPECT_EQ(rank(FpMatrix::from_rows({{3, 1}, {1, 2}}, PrimeField(5)), PrimeField(5)), 1u);
  EXPECT_EQ(rank(FpMatrix::from_rows({{3, 1}, {1, 2}}, PrimeField(7)), PrimeField(7)), 2u);
}

TEST(RankTest, RankInPlaceLeavesEchelonForm) {
  const PrimeField f(11);
  auto m = FpMatrix::from_rows({{0, 2, 4}, {3, 1, 1}, {3, 3, 5}}, f);
  EXPECT_EQ(rank_in_place(m, f), 2u);
  EXPECT_EQ(m(0, 0), 1u);
  EXPECT_EQ(m(1, 0), 0u);
  EXPECT_EQ(m(2, 0), 0u);
  EXPECT_EQ(m(2, 1), 0u);
  EXPECT_EQ(m(2, 2), 0u);
}

TEST(RankTest, HconcatSkipsEmptyBlocks) {
  const PrimeField f(7);
  std::vector<FpMatrix> blocks{FpMatrix(2, 0), FpMatrix::identity(2), FpMatrix(2, 0)};
  const FpMatrix m = hconcat(blocks, 2);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m, FpMatrix::identity(2));
}

// Property checks on seeded random matrices.

TEST(RankProperty, RankNullityAndTranspose) {
  std::mt19937_64 gen(2024);
  const PrimeField f(101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = gen() % 9, cols = gen() % 9;
    const int planted = static_cast<int>(gen() % 6);
    const FpMatrix m = random_matrix(rows, cols, f.p(), gen, planted);
    const std::size_t r = rank(m, f);
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(r + kernel_dim(m, f), cols);
    EXPECT_EQ(r, rank(m.transpose(), f));
    EXPECT_EQ(r, oracle::naive_rank(m, f.p()));
  }
}

TEST(RankProperty, RowOperationsPreserveRank) {
  std::mt19937_64 gen(7);
  const PrimeField f(32003);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 2 + gen() % 8, cols = 1 + gen() % 8;
    FpMatrix m = random_matrix(rows, cols, f.p(), gen, static_cast<int>(gen() % 5));
    const std::size_t r = rank(m, f);
    m.swap_rows(0, rows - 1);
    EXPECT_EQ(rank(m, f), r);
    const Residue s = 1 + static_cast<Residue>(gen() % (f.p() - 1));
    for (auto& v : m.row(1)) v = f.mul(v, s);
    EXPECT_EQ(rank(m, f), r);
  }
}

TEST(RankProperty, ColumnPermutationPreservesRank) {
  std::mt19937_64 gen(99);
  const PrimeField f(13);
  for (int trial = 0; trial < 100; ++trial) {
    const FpMatrix m = random_matrix(6, 7, f.p(), gen, static_cast<int>(gen() % 7));
    std::vector<std::size_t> perm(m.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    FpMatrix permuted(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) permuted(r, perm[c]) = m(r, c);
    EXPECT_EQ(rank(m, f), rank(permuted, f));
  }
}

TEST(RankProperty, BothEliminationPathsAgreeWithOracle) {
  // 65521 takes the deferred-reduction path, 1000003 the eager one.
  std::mt19937_64 gen(31);
  for (std::uint32_t p : {65521u, 1000003u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + gen() % 12, cols = 1 + gen() % 12;
      const FpMatrix m = random_matrix(rows, cols, p, gen, static_cast<int>(gen() % 8));
      FpMatrix echelon = m;
      const std::size_t r = rank_in_place(echelon, f);
      EXPECT_EQ(r, oracle::naive_rank(m, p));
      EXPECT_TRUE(echelon.is_reduced(f));
      EXPECT_EQ(rank(echelon, f), r);
      for (std::size_t i = r; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) EXPECT_EQ(echelon(i, c), 0u);
    }
  }
}

TEST(RankProperty, PlantedRankIsRecoveredOverLargePrime) {
  std::mt19937_64 gen(5);
  const PrimeField f(32003);
  for (int k = 0; k <= 20; ++k) {
    const FpMatrix m = random_matrix(40, 30, f.p(), gen, k);
    EXPECT_EQ(rank(m, f), static_cast<std::size_t>(k));
  }
}

}  // namespace
}  // namespace ein
