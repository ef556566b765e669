#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hdgap/root_system.hpp"

using hdgap::ErrorKind;
using hdgap::Family;
using hdgap::MultiplicityPattern;
using hdgap::Rational;
using hdgap::RestrictedType;
using hdgap::Root;
using hdgap::RootClass;
using hdgap::RootSystem;
using hdgap::WeightVector;

namespace {

constexpr Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D, Family::BC};

RootSystem split(Family f, int r) { return hdgap::build_system({f, r}, MultiplicityPattern::uniform(f, 1)); }

std::vector<std::string> names(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  for (const auto& a : roots) out.push_back(a.to_string());
  return out;
}

// Independent enumeration of Delta+ straight from the defining sets.
std::vector<WeightVector> brute_positive_roots(Family f, int r) {
  const std::size_t d = static_cast<std::size_t>(f == Family::A ? r + 1 : r);
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      WeightVector v(d);
      v[i] = 1;
      v[j] = -1;
      out.push_back(v);
      if (f != Family::A) {
        v[j] = 1;
        out.push_back(v);
      }
    }
    if (f == Family::B || f == Family::BC) out.push_back(WeightVector::unit(d, i, 1));
    if (f == Family::C || f == Family::BC) out.push_back(WeightVector::unit(d, i, 2));
  }
  return out;
}

std::int64_t expected_count(Family f, std::int64_t r) {
  switch (f) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::BC: return r * r + r;
  }
  return -1;
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

TEST(BuildSystem, SplitA3) {
  const RootSystem s = split(Family::A, 3);
  EXPECT_EQ(s.ambient_dim(), 4u);
  EXPECT_EQ(names(s.positive_roots()),
            (std::vector<std::string>{"e1-e4", "e1-e3", "e1-e2", "e2-e4", "e2-e3", "e3-e4"}));
}

TEST(BuildSystem, SplitC2) {
  const RootSystem s = split(Family::C, 2);
  EXPECT_EQ(names(s.positive_roots()), (std::vector<std::string>{"2e1", "e1+e2", "e1-e2", "2e2"}));
}

TEST(BuildSystem, BC1WithPattern) {
  const RootSystem s = hdgap::build_system({Family::BC, 1}, MultiplicityPattern::classical(Family::BC, 2, 2, 1));
  const auto roots = s.positive_roots();
  EXPECT_EQ(names(roots), (std::vector<std::string>{"2e1", "e1"}));
  EXPECT_EQ(s.multiplicity(roots[0]), 1);
  EXPECT_EQ(s.multiplicity(roots[1]), 2);
}

TEST(BuildSystem, SimpleRootsMatchTabulatedSets) {
  EXPECT_EQ(names(split(Family::B, 3).simple_roots()), (std::vector<std::string>{"e1-e2", "e2-e3", "e3"}));
  EXPECT_EQ(names(split(Family::C, 3).simple_roots()), (std::vector<std::string>{"e1-e2", "e2-e3", "2e3"}));
  EXPECT_EQ(names(split(Family::D, 4).simple_roots()), (std::vector<std::string>{"e1-e2", "e2-e3", "e3-e4", "e3+e4"}));
  EXPECT_EQ(names(split(Family::A, 2).simple_roots()), (std::vector<std::string>{"e1-e2", "e2-e3"}));
  EXPECT_EQ(names(split(Family::BC, 2).simple_roots()), (std::vector<std::string>{"e1-e2", "e2"}));
}

TEST(BuildSystem, RankBelowBoundIsUnsupported) {
  EXPECT_EQ(kind_of([] { (void)split(Family::D, 3); }), ErrorKind::UnsupportedRank);
  EXPECT_EQ(kind_of([] { (void)split(Family::B, 1); }), ErrorKind::UnsupportedRank);
  EXPECT_EQ(kind_of([] { (void)split(Family::A, 0); }), ErrorKind::UnsupportedRank);
  EXPECT_NO_THROW((void)split(Family::A, 1));
  EXPECT_NO_THROW((void)split(Family::BC, 1));
}

TEST(BuildSystem, PatternShapeMismatchIsPatternError) {
  EXPECT_EQ(kind_of([] { (void)hdgap::build_system({Family::A, 2}, MultiplicityPattern{1, 1, 0, 0}); }), ErrorKind::Pattern);
  EXPECT_EQ(kind_of([] { (void)hdgap::build_system({Family::C, 2}, MultiplicityPattern{1, 1, 1, 1}); }), ErrorKind::Pattern);
  EXPECT_EQ(kind_of([] { (void)hdgap::build_system({Family::BC, 2}, MultiplicityPattern{2, 2, 0, 1}); }), ErrorKind::Pattern);
}

TEST(BuildSystem, PositiveRootsAgreeWithDefiningSetsAndCounts) {
  for (Family f : kFamilies) {
    for (int r = hdgap::min_rank(f); r <= 40; ++r) {
      const RootSystem s = split(f, r);
      const auto roots = s.positive_roots();
      ASSERT_EQ(static_cast<std::int64_t>(roots.size()), expected_count(f, r));
      ASSERT_EQ(s.positive_root_count(), expected_count(f, r));
      if (r > 12) continue;
      std::vector<WeightVector> got;
      for (const auto& a : roots) got.push_back(a.to_vector(s.ambient_dim()));
      auto want = brute_positive_roots(f, r);
      std::sort(want.begin(), want.end());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(sorted, want) << s.rtype().name();
      // Canonical order is strictly descending lexicographic.
      for (std::size_t n = 1; n < got.size(); ++n) ASSERT_GT(got[n - 1], got[n]);
    }
  }
}

TEST(BuildSystem, PositiveRootsAreNonnegativeIntegerCombinationsOfSimpleRoots) {
  for (Family f : kFamilies) {
    for (int r = hdgap::min_rank(f); r <= 9; ++r) {
      const RootSystem s = split(f, r);
      for (const auto& a : s.positive_roots()) {
        const auto c = hdgap::simple_root_coordinates(s, a.to_vector(s.ambient_dim()));
        for (const auto& x : c) {
          ASSERT_TRUE(x.is_integer() && x.sign() >= 0) << s.rtype().name() << " " << a.to_string();
        }
      }
    }
  }
}

TEST(TwoRho, Examples) {
  EXPECT_EQ(hdgap::two_rho(split(Family::B, 3)), (WeightVector{5, 3, 1}));
  const RootSystem su = hdgap::build_system({Family::BC, 2}, MultiplicityPattern::classical(Family::BC, 2, 2, 1));
  EXPECT_EQ(hdgap::two_rho(su), (WeightVector{8, 4}));
  EXPECT_EQ(hdgap::two_rho(split(Family::A, 1)), (WeightVector{1, -1}));
}

TEST(TwoRho, EqualsWeightedSumOfPositiveRoots) {
  const MultiplicityPattern patterns[] = {{3, 0, 0, 0}, {2, 2, 5, 0}, {4, 4, 0, 3}, {2, 2, 0, 0}, {4, 4, 8, 3}};
  for (std::size_t n = 0; n < 5; ++n) {
    const Family f = kFamilies[n];
    for (int r = hdgap::min_rank(f); r <= 15; ++r) {
      const RootSystem s = hdgap::build_system({f, r}, patterns[n]);
      WeightVector sum(s.ambient_dim());
      for (const auto& a : s.positive_roots()) sum += a.to_vector(s.ambient_dim()) * Rational(s.multiplicity(a));
      ASSERT_EQ(hdgap::two_rho(s), sum) << s.rtype().name();
    }
  }
}

TEST(HighestRoot, Examples) {
  EXPECT_EQ(hdgap::highest_root(split(Family::C, 4)).to_string(), "2e1");
  EXPECT_EQ(hdgap::highest_root(split(Family::B, 4)).to_string(), "e1+e2");
  EXPECT_EQ(hdgap::highest_root(split(Family::A, 2)).to_string(), "e1-e3");
  EXPECT_EQ(hdgap::highest_root(split(Family::D, 5)).to_string(), "e1+e2");
}

TEST(HighestRoot, EveryPositiveRootIsBelowIt) {
  for (Family f : kFamilies) {
    for (int r = hdgap::min_rank(f); r <= 8; ++r) {
      const RootSystem s = split(f, r);
      const WeightVector h = hdgap::highest_root(s).to_vector(s.ambient_dim());
      for (const auto& a : s.positive_roots()) {
        if (f == Family::BC && a.cls == RootClass::Short) continue;
        for (const auto& x : hdgap::simple_root_coordinates(s, h - a.to_vector(s.ambient_dim()))) ASSERT_GE(x.sign(), 0);
      }
    }
  }
}

TEST(MaxRootPairing, MatchesBruteForceOnRandomVectors) {
  std::mt19937 rng(5);
  for (Family f : kFamilies) {
    for (int r = hdgap::min_rank(f); r <= 9; ++r) {
      const RootSystem s = split(f, r);
      for (int iter = 0; iter < 20; ++iter) {
        WeightVector w(s.ambient_dim());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rational(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 3));
        Rational best = s.positive_roots().front().pair(w);
        for (const auto& a : s.positive_roots()) best = std::max(best, hdgap::pairing(a.to_vector(w.size()), w));
        ASSERT_EQ(hdgap::max_root_pairing(s, w), best);
        if (hdgap::is_dominant(s, w)) ASSERT_EQ(hdgap::highest_root(s).pair(w), best);
      }
    }
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(hdgap::dimension(split(Family::A, 3)), 9);
  EXPECT_EQ(hdgap::dimension(hdgap::build_system({Family::A, 2}, MultiplicityPattern::uniform(Family::A, 2))), 8);
  EXPECT_EQ(hdgap::dimension(split(Family::C, 2)), 6);
}

TEST(NonMultipliable, DropsShortRootsOfBCOnly) {
  EXPECT_EQ(names(hdgap::non_multipliable_positive_roots(split(Family::BC, 2))),
            (std::vector<std::string>{"2e1", "e1+e2", "e1-e2", "2e2"}));
  EXPECT_EQ(hdgap::non_multipliable_positive_roots(split(Family::B, 2)).size(), 4u);
  EXPECT_EQ(hdgap::non_multipliable_positive_roots(split(Family::A, 2)).size(), 3u);
}

TEST(Classify, SignedMembership) {
  const RootSystem b = split(Family::B, 3);
  EXPECT_TRUE(b.is_root(WeightVector{0, -1, 0}));
  EXPECT_TRUE(b.is_root(WeightVector{-1, 0, -1}));
  EXPECT_FALSE(b.is_root(WeightVector{2, 0, 0}));
  EXPECT_FALSE(b.is_root(WeightVector{1, 1, 1}));
  const RootSystem c = split(Family::C, 3);
  EXPECT_TRUE(c.is_root(WeightVector{0, 0, -2}));
  EXPECT_FALSE(c.is_root(WeightVector{0, 0, 1}));
  EXPECT_EQ(kind_of([&] { (void)c.is_root(WeightVector{1, 1}); }), ErrorKind::Dimension);
}

TEST(SimpleRootCoordinates, OutsideSpanIsDomainError) {
  const RootSystem a = split(Family::A, 2);
  EXPECT_EQ(kind_of([&] { (void)hdgap::simple_root_coordinates(a, WeightVector{1, 0, 0}); }), ErrorKind::Domain);
}
