#include <gtest/gtest.h>

#include <algorithm>

#include "hdgap/verify.hpp"

using hdgap::ExactPolynomial;
using hdgap::FamilyId;
using hdgap::IntRange;
using hdgap::Quantity;
using hdgap::Rational;
using hdgap::VerifyOptions;

namespace {

ExactPolynomial R() { return ExactPolynomial::r(); }
ExactPolynomial K() { return ExactPolynomial::k(); }

VerifyOptions small(IntRange ranks, IntRange ks = {1, 10}) {
  VerifyOptions o;
  o.sweep_ranks = ranks;
  o.sweep_ks = ks;
  o.fit_ranks = IntRange{2, 24};
  o.fit_ks = IntRange{1, 8};
  return o;
}

const hdgap::FitResult* find_fit(const hdgap::FamilySummary& s, const std::string& label, Quantity q) {
  for (const auto& f : s.fits) {
    if (f.label == label && f.quantity == q) return &f;
  }
  return nullptr;
}

}  // namespace

TEST(VerifyFamily, SplitBEvenRecoversPrintedForms) {
  const auto sum = hdgap::verify_family(FamilyId::SO_rk, 1, small({4, 20}));
  const auto* p = find_fit(sum, "split B_r, r = 2m", Quantity::ThetaPairing);
  const auto* l = find_fit(sum, "split B_r, r = 2m", Quantity::Ell);
  ASSERT_TRUE(p && l);
  EXPECT_EQ(p->fitted, R() * (3 * R() - 2) / 4);
  EXPECT_EQ(l->fitted, 4 * R() - 6);
  EXPECT_TRUE(p->matches_printed && l->matches_printed);
  EXPECT_EQ(sum.passed, sum.instances);
  EXPECT_TRUE(sum.ok());
}

TEST(VerifyFamily, SURKFitsAndMarginFormula) {
  const auto sum = hdgap::verify_family(FamilyId::SU_rk, std::nullopt, small({2, 10}, {1, 10}));
  const auto* p = find_fit(sum, "SU_{r,r+k}", Quantity::ThetaPairing);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->fitted, (2 * R() + 2 * K() - 1) * R());
  EXPECT_TRUE(sum.ok());
  for (int r = 2; r <= 10; ++r) {
    for (int k = 1; k <= 10; ++k) {
      auto [g, s] = hdgap::resolve(FamilyId::SU_rk, r, k);
      const Rational excess = hdgap::theta_pairing(s) / hdgap::ell(s) - Rational(r, 4);
      EXPECT_EQ(excess, Rational(2 * k * r + r, 4 * (4 * r + 2 * k - 3)));
    }
  }
}

TEST(VerifyFamily, SplitCIsFlaggedAgainstPrintedValue) {
  VerifyOptions o = small({2, 100});
  o.fit_ranks = IntRange{2, 40};
  const auto sum = hdgap::verify_family(FamilyId::SpR, std::nullopt, o);
  EXPECT_EQ(sum.passed, sum.instances);
  const auto* p = find_fit(sum, "split C_r", Quantity::ThetaPairing);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->fitted, R() * R());
  EXPECT_FALSE(p->matches_printed);
  EXPECT_TRUE(p->accepted);
  ASSERT_EQ(sum.findings.size(), 1u);
  EXPECT_EQ(sum.findings[0].paper_value, "r^2 - r");
  EXPECT_EQ(sum.findings[0].computed_value, "r^2");
  EXPECT_EQ(sum.findings[0].kind, "erratum");
  EXPECT_TRUE(sum.ok());
}

TEST(VerifyFamily, OddOrthogonalComplexEvenRankErratum) {
  const auto sum = hdgap::verify_family(FamilyId::SOC_odd, std::nullopt, small({2, 30}));
  const auto* p = find_fit(sum, "SO_{2r+1}(C), r = 2m", Quantity::ThetaPairing);
  const auto* l = find_fit(sum, "SO_{2r+1}(C), r = 2m", Quantity::Ell);
  ASSERT_TRUE(p && l);
  EXPECT_EQ(p->fitted, R() * (3 * R() - 1) / 2);
  EXPECT_EQ(l->fitted, 8 * R() - 10);
  EXPECT_FALSE(p->matches_printed);
  EXPECT_FALSE(l->matches_printed);
  // The printed values are the pairings with 2rho itself.
  for (int r = 4; r <= 30; r += 2) {
    auto [g, s] = hdgap::resolve(FamilyId::SOC_odd, r);
    const auto two_rho = hdgap::two_rho(s);
    const auto theta = hdgap::theta_closed(s);
    EXPECT_EQ(hdgap::pairing(theta, two_rho), Rational(3 * r * r, 2));
    EXPECT_EQ(two_rho[0] + two_rho[1], Rational(8 * r - 8));
  }
  EXPECT_TRUE(sum.ok());
}

TEST(VerifyFamily, LowRankEllBoundaryIsReported) {
  const auto sum = hdgap::verify_family(FamilyId::SO_rk, std::nullopt, small({2, 12}, {1, 6}));
  const auto has = [&](const std::string& where, const std::string& paper, const std::string& computed) {
    return std::any_of(sum.findings.begin(), sum.findings.end(), [&](const hdgap::Finding& f) {
      return f.location == where && f.paper_value == paper && f.computed_value == computed && f.documented;
    });
  };
  EXPECT_TRUE(has("SO_{r,r+k}, r = 2m, ell at r = 2", "2k", "2k + 1"));
  EXPECT_TRUE(has("SO_{r,r+k}, r = 2m+1, ell at r = 3", "2k + 4", "(4k + 9)/2"));
  EXPECT_TRUE(sum.ok());
}

TEST(VerifyFamily, MarginCertificatesArePositive) {
  for (FamilyId id : hdgap::kAllFamilies) {
    const auto sum = hdgap::verify_family(id, std::nullopt, small({2, 60}, {1, 12}));
    EXPECT_FALSE(sum.certificates.empty()) << hdgap::to_string(id);
    for (const auto& c : sum.certificates) {
      EXPECT_TRUE(c.certificate.positive) << c.label;
      EXPECT_GT(c.certificate.leading_sign, 0) << c.label;
    }
    EXPECT_TRUE(sum.ok()) << hdgap::to_string(id);
  }
}

TEST(VerifyFamily, EveryReferenceRowIsExercised) {
  std::size_t fits = 0;
  for (FamilyId id : hdgap::kAllFamilies) fits += hdgap::verify_family(id, std::nullopt, small({2, 8}, {1, 3})).fits.size();
  EXPECT_EQ(fits, 2 * hdgap::reference_formulas().size());
}

TEST(VerifyFamily, RankRangeBelowFamilyBoundIsRejected) {
  EXPECT_THROW((void)hdgap::verify_family(FamilyId::SO_rr, std::nullopt, small({3, 3})), hdgap::Error);
}
