#include <gtest/gtest.h>

#include "apolar/field.hpp"
#include "apolar/rank.hpp"
#include "apolar/random_forms.hpp"
#include "oracles.hpp"

using namespace apolar;

TEST(Rational, CanonicalAfterConstruction) {
  Rational q(6, -4);
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
}

TEST(Rational, ArithmeticStaysCanonical) {
  Rational a(1, 6), b(1, 3);
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a - b).to_string(), "-1/6");
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ((a / b).to_string(), "1/2");
  EXPECT_EQ((-a).to_string(), "-1/6");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(0).inv(), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(2147483649ULL), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(7));
}

TEST(PrimeField, PrimalityOfKnownValues) {
  EXPECT_TRUE(is_prime(2147483647ULL));
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(3215031751ULL));
}

TEST(ModP, ArithmeticWrapsAtModulus) {
  PrimeField f(7);
  auto a = f.from_int(5), b = f.from_int(4);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((b - a).value(), 6u);
  EXPECT_EQ((a * b).value(), 6u);
  EXPECT_EQ((a * a.inv()).value(), 1u);
  EXPECT_EQ(f.from_int(-1).value(), 6u);
  EXPECT_EQ(f.from_fraction(1, 2).value(), 4u);
}

TEST(ModP, MixedModuliThrow) {
  auto a = PrimeField(7).from_int(1);
  auto b = PrimeField(11).from_int(1);
  EXPECT_THROW(a + b, MixedFields);
  EXPECT_THROW(PrimeField(7).from_int(0).inv(), DivisionByZero);
}

TEST(ModP, InverseProperty) {
  PrimeField f;
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = random_nonzero_scalar(f, rng);
    EXPECT_EQ(x * x.inv(), one_of(f));
  }
}

TEST(ParseScalar, AcceptsSignsAndFractions) {
  RationalField q;
  EXPECT_EQ(parse_scalar("-3/6", q).to_string(), "-1/2");
  EXPECT_EQ(parse_scalar("+5", q).to_string(), "5");
  EXPECT_THROW(parse_scalar("3/x", q), InvalidArgument);
  EXPECT_THROW(parse_scalar("1/0", q), DivisionByZero);
  EXPECT_EQ(parse_scalar("-1", PrimeField(7)).value(), 6u);
}

namespace {

template <class Field>
DenseMatrix<typename Field::scalar_type> low_rank(std::size_t rows, std::size_t cols, std::size_t k,
                                                  const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  DenseMatrix<S> a(rows, k), b(k, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = random_scalar(field, rng);
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = random_scalar(field, rng);
  DenseMatrix<S> m = DenseMatrix<S>::Constant(rows, cols, zero_of(field));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index t = 0; t < a.cols(); ++t) m(i, j) += a(i, t) * b(t, j);
  return m;
}

template <class S>
std::vector<std::vector<S>> rows_of(const DenseMatrix<S>& m) {
  std::vector<std::vector<S>> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<S> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

template <class Field>
class RankTest : public ::testing::Test {};
using Fields = ::testing::Types<RationalField, PrimeField>;
TYPED_TEST_SUITE(RankTest, Fields);

TYPED_TEST(RankTest, MatchesEliminationOracle) {
  TypeParam field;
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, k = rng() % 7;
    auto m = low_rank(rows, cols, k, field, rng);
    EXPECT_EQ(exact_rank(m), oracle::gauss_rank(rows_of(m))) << rows << "x" << cols << " k=" << k;
    EXPECT_LE(exact_rank(m), std::min({rows, cols, k}));
  }
}

TYPED_TEST(RankTest, TransposeInvariant) {
  TypeParam field;
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = low_rank(3 + rng() % 6, 3 + rng() % 6, rng() % 5, field, rng);
    EXPECT_EQ(exact_rank(m), exact_rank(m.transpose()));
  }
}

TYPED_TEST(RankTest, NullVectorIsInKernel) {
  TypeParam field;
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = low_rank(6, 7, 1 + rng() % 5, field, rng);
    auto x = null_vector(m, field);
    ASSERT_TRUE(x.has_value());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      auto acc = zero_of(field);
      for (Eigen::Index j = 0; j < m.cols(); ++j) acc += m(i, j) * (*x)[static_cast<std::size_t>(j)];
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

TEST(Rank, RationalEntriesWithDenominators) {
  DenseMatrix<Rational> m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  EXPECT_EQ(exact_rank(m), 1u);
  m(1, 1) = Rational(2);
  EXPECT_EQ(exact_rank(m), 2u);
}
