#include <random>

#include <gtest/gtest.h>

#include "jacsyz/exactlin.hpp"
#include "jacsyz/kernels.hpp"
#include "jacsyz/modular.hpp"
#include "jacsyz/primes.hpp"
#include "jacsyz/reference.hpp"
#include "test_support.hpp"

namespace jacsyz {
namespace {

using Q = RationalField;
using QMat = DenseMatrix<Q>;

QMat qmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<mpq_class>> r;
  for (const auto& row : rows) {
    std::vector<mpq_class> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return QMat::from_rows(Q{}, r);
}

DenseMatrix<PrimeField> reduce_mod(const QMat& m, std::uint64_t p) {
  PrimeField k(p);
  DenseMatrix<PrimeField> out(k, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = k.from_rational(m(i, j));
  return out;
}

TEST(Rank, Identity) { EXPECT_EQ(rank(qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u); }

TEST(Rank, ProportionalRowsOverQ) { EXPECT_EQ(rank(qmat({{1, 2}, {2, 4}})), 1u); }

TEST(Rank, ProportionalRowsModFive) { EXPECT_EQ(rank(reduce_mod(qmat({{1, 2}, {2, 4}}), 5)), 1u); }

TEST(Rank, DropsModuloDividingPrime) {
  auto m = qmat({{1, 2}, {3, 11}});  // determinant 5
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(reduce_mod(m, 5)), 1u);
}

TEST(Nullspace, ProportionalRows) {
  auto basis = nullspace_basis(qmat({{1, 2}, {2, 4}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (std::vector<mpq_class>{1, mpq_class(-1, 2)}));
}

TEST(Nullspace, IdentityIsEmpty) { EXPECT_TRUE(nullspace_basis(qmat({{1, 0}, {0, 1}})).empty()); }

TEST(Nullspace, ZeroMatrixGivesStandardBasis) {
  auto basis = nullspace_basis(QMat(Q{}, 2, 3));
  ASSERT_EQ(basis.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(basis[j][i], i == j ? 1 : 0);
}

TEST(InSpan, Examples) {
  auto m = qmat({{1, 2}, {3, 4}, {5, 6}});
  auto first = m.column(0);
  EXPECT_TRUE(in_span<Q>(first, m));
  std::vector<mpq_class> zero(3, 0);
  EXPECT_TRUE(in_span<Q>(zero, m));
  auto single = qmat({{1}, {0}});
  std::vector<mpq_class> v{0, 1};
  EXPECT_FALSE(in_span<Q>(v, single));
  std::vector<mpq_class> wrong(4, 0);
  EXPECT_THROW(in_span<Q>(wrong, m), DimensionMismatch);
}

TEST(Solve, UniqueAndInconsistent) {
  auto m = qmat({{2, 1}, {1, 3}});
  std::vector<mpq_class> b{3, 4};
  auto x = solve<Q>(m, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (std::vector<mpq_class>{1, 1}));
  auto sing = qmat({{1, 1}, {1, 1}});
  std::vector<mpq_class> c{1, 2};
  EXPECT_FALSE(solve<Q>(sing, c));
}

TEST(RationalReconstruct, RecoversSmallFractions) {
  mpz_class mod = mpz_class(working_prime(0)) * working_prime(1);
  for (auto q : {mpq_class(3, 7), mpq_class(-22, 9), mpq_class(0), mpq_class(123456789, 1000003)}) {
    mpz_class inv_den;
    mpz_invert(inv_den.get_mpz_t(), q.get_den().get_mpz_t(), mod.get_mpz_t());
    mpz_class a = q.get_num() * inv_den % mod;
    if (a < 0) a += mod;
    auto r = modular::rational_reconstruct(a, mod);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, q);
  }
}

TEST(Primes, WorkingPrimesDescendBelowLimit) {
  std::uint64_t prev = kMaxModulus;
  for (std::size_t i = 0; i < 8; ++i) {
    auto p = working_prime(i);
    EXPECT_TRUE(is_prime(p));
    EXPECT_LT(p, prev);
    prev = p;
  }
  EXPECT_EQ(previous_prime(100), 97u);
  EXPECT_EQ(next_prime(97), 101u);
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

class RandomMatrices : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatrices, RankPlusNullityEqualsColumns) {
  std::mt19937_64 rng(1000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  auto m = testing::random_int_matrix(rng, dim(rng), dim(rng), 40);
  auto r = rank(m);
  auto basis = nullspace_basis(m);
  EXPECT_EQ(r + basis.size(), m.cols());
  for (const auto& v : basis) {
    auto img = m.apply(v);
    for (const auto& e : img) EXPECT_EQ(e, 0);
  }
}

TEST_P(RandomMatrices, AgreesWithReferenceEliminationOverQ) {
  std::mt19937_64 rng(2000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 10), rk(0, 6);
  auto m = testing::random_low_rank(rng, dim(rng), dim(rng), rk(rng), 1000);
  EXPECT_EQ(rank(m), reference::rank(m));
  EXPECT_EQ(pivot_columns(m), reference::rref(m).pivots);
  EXPECT_EQ(nullspace_basis(m), reference::nullspace_basis(m));
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  EXPECT_EQ(rank(m), testing::naive_rank(rows));
}

TEST_P(RandomMatrices, AgreesWithReferenceEliminationModP) {
  std::mt19937_64 rng(3000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  auto m = reduce_mod(testing::random_int_matrix(rng, dim(rng), dim(rng), 5, 0.5), 7);
  EXPECT_EQ(rank(m), reference::rank(m));
  EXPECT_EQ(nullspace_basis(m), reference::nullspace_basis(m));
}

TEST_P(RandomMatrices, RankModPNeverExceedsRankOverQ) {
  std::mt19937_64 rng(4000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  auto m = testing::random_int_matrix(rng, dim(rng), dim(rng), 6, 0.2);
  const auto rq = rank(m);
  for (std::uint64_t p : std::vector<std::uint64_t>{5, 7, 11, 13, working_prime(0)}) EXPECT_LE(rank(reduce_mod(m, p)), rq);
}

TEST_P(RandomMatrices, SolveFindsPreimages) {
  std::mt19937_64 rng(5000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  auto m = testing::random_int_matrix(rng, dim(rng), dim(rng), 30);
  std::vector<mpq_class> x(m.cols());
  std::uniform_int_distribution<long> coef(-9, 9);
  for (auto& e : x) e = coef(rng);
  auto b = m.apply(x);
  auto sol = solve<Q>(m, b);
  ASSERT_TRUE(sol);
  EXPECT_EQ(m.apply(*sol), b);
  EXPECT_TRUE(in_span<Q>(b, m));
}

TEST_P(RandomMatrices, CertifiedEchelonLiftsTheExactKernel) {
  std::mt19937_64 rng(6000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(2, 14), rk(1, 8);
  auto m = testing::random_low_rank(rng, dim(rng), dim(rng), rk(rng), 1000000);
  auto ech = modular::certified_echelon(modular::to_integer_rows(m));
  auto ref = reference::rref(m);
  EXPECT_EQ(ech.pivots, ref.pivots);
  auto expected = reference::nullspace_basis(m);
  ASSERT_EQ(ech.kernel.size(), expected.size());
  for (auto& v : ech.kernel) normalize_leading_one(Q{}, v);
  EXPECT_EQ(ech.kernel, expected);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Range(0, 25));

class KernelAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KernelAgreement, SerialAndParallelEchelonMatch) {
  std::mt19937_64 rng(7000 + GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 90);
  const std::size_t rows = dim(rng), cols = dim(rng);
  const std::uint64_t p = GetParam() % 2 ? working_prime(0) : 101;
  std::uniform_int_distribution<std::uint64_t> entry(0, p - 1);
  std::bernoulli_distribution zero(GetParam() % 3 == 0 ? 0.9 : 0.2);
  std::vector<std::uint64_t> a(rows * cols);
  for (auto& e : a) e = zero(rng) ? 0 : entry(rng);
  for (auto mode : {kernels::Reduction::Forward, kernels::Reduction::Full}) {
    auto s = a, t = a;
    auto ps = kernels::echelon_serial(s, rows, cols, p, mode);
    auto pt = kernels::echelon_parallel(t, rows, cols, p, mode);
    EXPECT_EQ(ps, pt);
    EXPECT_EQ(s, t);
  }
  auto full = a;
  auto piv = kernels::echelon_serial(full, rows, cols, p, kernels::Reduction::Full);
  auto ker = kernels::kernel_from_rref(full, cols, piv, p);
  EXPECT_EQ(piv.size() + ker.size(), cols);
  for (const auto& v : ker)
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc = modarith::add(acc, modarith::mul(a[i * cols + j], v[j], p), p);
      EXPECT_EQ(acc, 0u);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, KernelAgreement, ::testing::Range(0, 12));

}  // namespace
}  // namespace jacsyz
