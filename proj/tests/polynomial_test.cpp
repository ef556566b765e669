#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hdgap/polynomial.hpp"

using hdgap::DegreeBound;
using hdgap::ErrorKind;
using hdgap::ExactPolynomial;
using hdgap::IntRange;
using hdgap::Rational;
using hdgap::Sample;

namespace {

ExactPolynomial R() { return ExactPolynomial::r(); }
ExactPolynomial K() { return ExactPolynomial::k(); }

std::vector<Sample> univariate(std::initializer_list<std::pair<int, Rational>> pts) {
  std::vector<Sample> out;
  for (const auto& [r, v] : pts) out.push_back({Rational(r), Rational(0), v});
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const hdgap::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Invariant;
}

}  // namespace

TEST(Polynomial, RendersWithCommonDenominator) {
  EXPECT_EQ((R() * (3 * R() - 2) / 4).to_string(), "(3r^2 - 2r)/4");
  EXPECT_EQ((R() / 2).to_string(), "r/2");
  EXPECT_EQ((2 * R() * K() + R()).to_string(), "2rk + r");
  EXPECT_EQ(ExactPolynomial().to_string(), "0");
}

TEST(Polynomial, CanonicalFormDropsZeroTerms) {
  const ExactPolynomial p = R() * R() - R() * R() + 5;
  EXPECT_EQ(p, ExactPolynomial(5));
  EXPECT_EQ(p.degree_r(), 0);
  EXPECT_EQ(p.terms().size(), 1u);
}

TEST(FitPolynomial, RecoversQuadraticWithHoldout) {
  // r(3r - 2)/4 at r = 2, 4, 6, 8 with r = 10 held out.
  const auto s = univariate({{2, 2}, {4, 10}, {6, 24}, {8, 44}, {10, 70}});
  EXPECT_EQ(hdgap::fit_polynomial(s, DegreeBound{2, 0}), R() * (3 * R() - 2) / 4);
}

TEST(FitPolynomial, TriangularSamplesGiveTriangularPolynomial) {
  const auto s = univariate({{2, 3}, {4, 10}, {6, 21}, {8, 36}, {10, 55}});
  EXPECT_EQ(hdgap::fit_polynomial(s, DegreeBound{2, 0}), R() * (R() + 1) / 2);
}

TEST(FitPolynomial, ConstantAndLinear) {
  EXPECT_EQ(hdgap::fit_polynomial(univariate({{1, 5}, {2, 5}, {3, 5}}), DegreeBound{0, 0}), ExactPolynomial(5));
  EXPECT_EQ(hdgap::fit_polynomial(univariate({{2, 3}, {3, 5}, {4, 7}, {5, 9}}), DegreeBound{1, 0}), 2 * R() - 1);
}

TEST(FitPolynomial, HoldoutMismatchIsDegreeBoundExceeded) {
  const auto s = univariate({{1, 1}, {2, 8}, {3, 27}, {4, 64}, {5, 125}});
  EXPECT_EQ(kind_of([&] { (void)hdgap::fit_polynomial(s, DegreeBound{2, 0}); }), ErrorKind::DegreeBoundExceeded);
}

TEST(FitPolynomial, UnderdeterminedIsInsufficientSamples) {
  const auto s = univariate({{1, 1}, {2, 4}, {3, 9}});
  EXPECT_EQ(kind_of([&] { (void)hdgap::fit_polynomial(s, DegreeBound{2, 0}); }), ErrorKind::InsufficientSamples);
  // Enough points but all at one r: the k-free monomials are not separated.
  std::vector<Sample> flat;
  for (int k = 0; k < 10; ++k) flat.push_back({Rational(3), Rational(k), Rational(k)});
  EXPECT_EQ(kind_of([&] { (void)hdgap::fit_polynomial(flat, DegreeBound{2, 1}); }), ErrorKind::InsufficientSamples);
}

TEST(FitPolynomial, DuplicatePointIsDomainError) {
  const auto s = univariate({{1, 1}, {1, 1}, {2, 4}, {3, 9}, {4, 16}});
  EXPECT_EQ(kind_of([&] { (void)hdgap::fit_polynomial(s, DegreeBound{2, 0}); }), ErrorKind::Domain);
}

TEST(FitPolynomial, BivariateReproducesEverySample) {
  const ExactPolynomial truth = (2 * R() + 2 * K() - 1) * R();
  std::vector<Sample> s;
  for (int r = 2; r <= 8; ++r) {
    for (int k = 1; k <= 5; ++k) s.push_back({Rational(r), Rational(k), truth.evaluate(r, k)});
  }
  std::shuffle(s.begin(), s.end(), std::mt19937(3));
  const ExactPolynomial fit = hdgap::fit_polynomial(s, DegreeBound{2, 1});
  EXPECT_EQ(fit, truth);
  for (const auto& smp : s) EXPECT_EQ(fit.evaluate(smp.r, smp.k), smp.value);
}

TEST(FitPolynomial, RandomPolynomialsRoundTrip) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    ExactPolynomial truth;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 1; ++b) {
        truth += ExactPolynomial::monomial({a, b}, Rational(static_cast<int>(rng() % 17) - 8, static_cast<int>(rng() % 4) + 1));
      }
    }
    std::vector<Sample> s;
    for (int r = 1; r <= 5; ++r) {
      for (int k = 0; k <= 3; ++k) s.push_back({Rational(r), Rational(k), truth.evaluate(r, k)});
    }
    ASSERT_EQ(hdgap::fit_polynomial(s, DegreeBound{2, 1}), truth);
  }
}

TEST(Positivity, SplitCNumeratorIsPositive) {
  const ExactPolynomial p = R() * R() - R() * (4 * R() - 2) / 4;
  EXPECT_EQ(p, R() / 2);
  const auto cert = hdgap::prove_positive_on_range(p, IntRange{2, 100});
  EXPECT_TRUE(cert.positive);
  EXPECT_EQ(cert.points_checked, 99);
  EXPECT_EQ(cert.leading_sign, 1);
}

TEST(Positivity, NegativeConstantIsNotPositive) {
  const auto cert = hdgap::prove_positive_on_range(ExactPolynomial(-1), IntRange{2, 10}, IntRange{1, 3});
  EXPECT_FALSE(cert.positive);
  ASSERT_TRUE(cert.counterexample);
  EXPECT_EQ(*cert.counterexample, std::make_pair(2L, 1L));
}

TEST(Positivity, BivariateNumerator) {
  const ExactPolynomial p = R() * K() + 4 * R();
  EXPECT_TRUE(hdgap::prove_positive_on_range(p, IntRange{2, 50}, IntRange{1, 50}).positive);
}

TEST(Positivity, EmptyRangeIsDomainError) {
  EXPECT_EQ(kind_of([] { (void)hdgap::prove_positive_on_range(R(), IntRange{3, 2}); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { (void)hdgap::prove_positive_on_range(R(), IntRange{1, 2}, IntRange{5, 1}); }), ErrorKind::Domain);
}

TEST(Positivity, AgreesWithPointwiseEvaluation) {
  const ExactPolynomial p = R() * R() - 7 * R() + K() * 3 - 2;
  const auto cert = hdgap::prove_positive_on_range(p, IntRange{-5, 12}, IntRange{0, 4});
  bool all = true;
  for (long k = 4; k >= 0; --k) {
    for (long r = 12; r >= -5; --r) all = all && p.evaluate(r, k).sign() > 0;
  }
  EXPECT_EQ(cert.positive, all);
  EXPECT_EQ(hdgap::prove_positive_on_range(p, IntRange{-5, 12}, IntRange{0, 4}).counterexample, cert.counterexample);
}

TEST(Polynomial, SubstituteR) {
  const ExactPolynomial p = R() * R() + K();
  EXPECT_EQ(hdgap::substitute_r(p, 2 * R() + 1), 4 * R() * R() + 4 * R() + 1 + K());
  EXPECT_EQ(hdgap::substitute_r(p, ExactPolynomial(3)), 9 + K());
}
