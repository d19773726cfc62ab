#include <gtest/gtest.h>

#include "apolar/form_io.hpp"
#include "apolar/gcd.hpp"
#include "apolar/random_forms.hpp"

using namespace apolar;

TEST(Gcd, MonomialExamples) {
  RationalField q;
  auto a = parse_form("y0^2*y1", 2, q), b = parse_form("y0*y1^2", 2, q);
  EXPECT_EQ(to_string(gcd_forms(a, b)), "y0*y1");
}

TEST(Gcd, PartialsOfSquarefreeMonomialAreCoprime) {
  RationalField q;
  auto f = parse_form("y0*y1*y2", 3, q);
  std::vector<Form<Rational>> partials{partial(f, 0), partial(f, 1), partial(f, 2)};
  EXPECT_EQ(to_string(gcd_forms<Rational>(partials)), "1");
}

TEST(Gcd, ScaledCommonFactor) {
  RationalField q;
  auto a = parse_form("2*y0^3 + 4*y0^2*y1 + 2*y0*y1^2", 2, q);
  auto b = parse_form("3*y0^2*y1 + 6*y0*y1^2 + 3*y1^3", 2, q);
  auto g = gcd_forms(a, b);
  EXPECT_EQ(to_string(g), "y0^2 + 2*y0*y1 + y1^2");
  EXPECT_TRUE(exact_divide(a, g).has_value());
  EXPECT_TRUE(exact_divide(b, g).has_value());
}

TEST(Gcd, SingleFormIsNormalized) {
  RationalField q;
  std::vector<Form<Rational>> one{parse_form("3*y0 + 6*y1", 2, q)};
  EXPECT_EQ(to_string(gcd_forms<Rational>(one)), "y0 + 2*y1");
}

TEST(Gcd, AllZeroThrows) {
  std::vector<Form<Rational>> zeros{Form<Rational>(2, 3), Form<Rational>(2, 3)};
  EXPECT_THROW(gcd_forms<Rational>(zeros), AllZero);
}

TEST(Gcd, ZeroEntriesAreSkipped) {
  RationalField q;
  std::vector<Form<Rational>> forms{Form<Rational>(2, 2), parse_form("y0^2 - y1^2", 2, q)};
  EXPECT_EQ(to_string(gcd_forms<Rational>(forms)), "y0^2 - y1^2");
}

template <class Field>
class GcdProperty : public ::testing::Test {};
using Fields = ::testing::Types<RationalField, PrimeField>;
TYPED_TEST_SUITE(GcdProperty, Fields);

// gcd(g a, g b) is a multiple of g and divides both products.
TYPED_TEST(GcdProperty, PlantedFactorRecovered) {
  using S = typename TypeParam::scalar_type;
  TypeParam field;
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 3;
    auto g = random_dense_form(n, 1 + static_cast<unsigned>(rng() % 2), field, rng);
    auto a = random_dense_form(n, 1 + static_cast<unsigned>(rng() % 3), field, rng);
    auto b = random_dense_form(n, 1 + static_cast<unsigned>(rng() % 3), field, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto ga = g * a, gb = g * b;
    auto d = gcd_forms<S>(ga, gb);
    EXPECT_TRUE(exact_divide(ga, d).has_value());
    EXPECT_TRUE(exact_divide(gb, d).has_value());
    EXPECT_TRUE(exact_divide(d, g).has_value()) << to_string(d) << " vs " << to_string(g);
  }
}

TYPED_TEST(GcdProperty, FoldAgreesWithPrefix) {
  using S = typename TypeParam::scalar_type;
  TypeParam field;
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + rng() % 3;
    auto common = random_linear(n, field, rng);
    std::vector<Form<S>> forms;
    for (int k = 0; k < 4; ++k) forms.push_back(common * random_sparse_form(n, 2, 1 + rng() % 4, field, rng));
    auto whole = gcd_forms<S>(forms);
    std::vector<Form<S>> prefix(forms.begin(), forms.begin() + 2);
    std::vector<Form<S>> staged{gcd_forms<S>(prefix), forms[2], forms[3]};
    EXPECT_EQ(whole, gcd_forms<S>(staged));
  }
}

// Two routes to the same gcd: the remainder sequence (two variables) and the
// linear-algebra step, run directly on the same bivariate input.
TYPED_TEST(GcdProperty, BivariateRoutesAgree) {
  TypeParam field;
  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    auto g = random_dense_form(2, 1 + static_cast<unsigned>(rng() % 3), field, rng);
    auto a = g * random_dense_form(2, 1 + static_cast<unsigned>(rng() % 4), field, rng);
    auto b = g * random_dense_form(2, 1 + static_cast<unsigned>(rng() % 4), field, rng);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(monic(detail::gcd_pair(a, b)), monic(detail::kernel_gcd(a, b)));
  }
}

TEST(Gcd, DenseQuarticPartialsInFourVariables) {
  PrimeField p;
  Rng rng(34);
  auto q1 = random_dense_form(4, 2, p, rng);
  auto q2 = random_dense_form(4, 2, p, rng);
  auto f = pow(q1, 3) * q2;
  std::vector<Form<ModP>> partials;
  for (std::size_t i = 0; i < 4; ++i) partials.push_back(partial(f, i));
  EXPECT_EQ(gcd_forms<ModP>(partials), monic(pow(q1, 2)));
}
