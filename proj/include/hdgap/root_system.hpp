#pragma once

/**
 * @file root_system.hpp
 * @brief Classical restricted root systems A_r, B_r, C_r, D_r and (BC)_r.
 *
 * Coordinates are in the orthonormal e-basis: A_r lives in the sum-zero
 * hyperplane of an (r+1)-dimensional space, the other families use r
 * coordinates. Roots are stored structurally (class plus indices) so that
 * pairings and class sums stay O(1) and O(r) even at rank 1000; the full
 * positive system is only materialized on request.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"
#include "hdgap/weight_vector.hpp"

namespace hdgap {

enum class Family { A, B, C, D, BC };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

/// Smallest supported rank. D_2 and D_3 coincide with A-type systems and
/// are not generated.
inline int min_rank(Family f) {
  switch (f) {
    case Family::A:
    case Family::BC: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 1;
}

struct RestrictedType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(to_string(family)) + "_" + std::to_string(rank); }
  friend bool operator==(const RestrictedType&, const RestrictedType&) = default;
};

/// Root classes: e_i - e_j, e_i + e_j (i < j), e_i and 2e_i.
enum class RootClass : std::uint8_t { Difference, Sum, Short, Long };

/// Multiplicity per root class; 0 marks a class absent from the family.
struct MultiplicityPattern {
  int difference = 0;
  int sum = 0;
  int short_root = 0;
  int long_root = 0;

  int of(RootClass c) const {
    switch (c) {
      case RootClass::Difference: return difference;
      case RootClass::Sum: return sum;
      case RootClass::Short: return short_root;
      case RootClass::Long: return long_root;
    }
    return 0;
  }

  /// Every class of the family gets multiplicity m (the split real form for m = 1).
  static MultiplicityPattern uniform(Family f, int m) {
    switch (f) {
      case Family::A: return {m, 0, 0, 0};
      case Family::B: return {m, m, m, 0};
      case Family::C: return {m, m, 0, m};
      case Family::D: return {m, m, 0, 0};
      case Family::BC: return {m, m, m, m};
    }
    return {};
  }

  /// Middle roots e_i +- e_j with multiplicity `middle`, end classes as given.
  static MultiplicityPattern classical(Family f, int middle, int short_mult, int long_mult) {
    switch (f) {
      case Family::A: return {middle, 0, 0, 0};
      case Family::B: return {middle, middle, short_mult, 0};
      case Family::C: return {middle, middle, 0, long_mult};
      case Family::D: return {middle, middle, 0, 0};
      case Family::BC: return {middle, middle, short_mult, long_mult};
    }
    return {};
  }

  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
};

inline bool has_class(Family f, RootClass c) {
  switch (c) {
    case RootClass::Difference: return true;
    case RootClass::Sum: return f != Family::A;
    case RootClass::Short: return f == Family::B || f == Family::BC;
    case RootClass::Long: return f == Family::C || f == Family::BC;
  }
  return false;
}

inline void validate_pattern(Family f, const MultiplicityPattern& p) {
  for (RootClass c : {RootClass::Difference, RootClass::Sum, RootClass::Short, RootClass::Long}) {
    const int m = p.of(c);
    if (has_class(f, c) && m <= 0) fail(ErrorKind::Pattern, "family " + std::string(to_string(f)) + " needs a positive multiplicity for every root class");
    if (!has_class(f, c) && m != 0) fail(ErrorKind::Pattern, "family " + std::string(to_string(f)) + " has no root class carrying multiplicity " + std::to_string(m));
  }
  if (f != Family::A && p.difference != p.sum) {
    fail(ErrorKind::Pattern, "e_i - e_j and e_i + e_j are Weyl-conjugate and must share a multiplicity");
  }
}

/// A root in structural form. Indices are 0-based; j is unused (-1) for
/// the Short and Long classes. Only positive roots are represented.
struct Root {
  RootClass cls = RootClass::Difference;
  int i = 0;
  int j = -1;

  WeightVector to_vector(std::size_t ambient) const {
    WeightVector v(ambient);
    switch (cls) {
      case RootClass::Difference: v[i] = 1; v[j] = -1; break;
      case RootClass::Sum: v[i] = 1; v[j] = 1; break;
      case RootClass::Short: v[i] = 1; break;
      case RootClass::Long: v[i] = 2; break;
    }
    return v;
  }

  Rational pair(const WeightVector& w) const {
    switch (cls) {
      case RootClass::Difference: return w[i] - w[j];
      case RootClass::Sum: return w[i] + w[j];
      case RootClass::Short: return w[i];
      case RootClass::Long: return w[i] + w[i];
    }
    return {};
  }

  std::string to_string() const {
    const std::string a = "e" + std::to_string(i + 1);
    switch (cls) {
      case RootClass::Difference: return a + "-e" + std::to_string(j + 1);
      case RootClass::Sum: return a + "+e" + std::to_string(j + 1);
      case RootClass::Short: return a;
      case RootClass::Long: return "2" + a;
    }
    return "?";
  }

  friend bool operator==(const Root&, const Root&) = default;
};

class RootSystem {
 public:
  RootSystem(RestrictedType rtype, MultiplicityPattern pattern) : rtype_(rtype), pattern_(pattern) {
    if (rtype.rank < min_rank(rtype.family)) {
      fail(ErrorKind::UnsupportedRank, rtype.name() + " is below the minimum rank " +
                                           std::to_string(min_rank(rtype.family)) + " of family " +
                                           std::string(to_string(rtype.family)));
    }
    validate_pattern(rtype.family, pattern);
    const int r = rtype.rank;
    for (int i = 0; i + 1 < r; ++i) simple_.push_back({RootClass::Difference, i, i + 1});
    switch (rtype.family) {
      case Family::A: simple_.push_back({RootClass::Difference, r - 1, r}); break;
      case Family::B:
      case Family::BC: simple_.push_back({RootClass::Short, r - 1, -1}); break;
      case Family::C: simple_.push_back({RootClass::Long, r - 1, -1}); break;
      case Family::D: simple_.push_back({RootClass::Sum, r - 2, r - 1}); break;
    }
  }

  const RestrictedType& rtype() const { return rtype_; }
  Family family() const { return rtype_.family; }
  int rank() const { return rtype_.rank; }
  const MultiplicityPattern& pattern() const { return pattern_; }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(rtype_.rank + (rtype_.family == Family::A ? 1 : 0)); }

  /// alpha_1, ..., alpha_r. For (BC)_r alpha_r is e_r (2e_r is its double).
  const std::vector<Root>& simple_roots() const { return simple_; }

  int multiplicity(const Root& a) const { return pattern_.of(a.cls); }

  std::int64_t class_size(RootClass c) const {
    if (!has_class(family(), c)) return 0;
    const std::int64_t d = static_cast<std::int64_t>(ambient_dim());
    switch (c) {
      case RootClass::Difference:
      case RootClass::Sum: return d * (d - 1) / 2;
      case RootClass::Short:
      case RootClass::Long: return d;
    }
    return 0;
  }

  /// |Delta+| as a set (multiplicities not counted).
  std::int64_t positive_root_count() const {
    std::int64_t n = 0;
    for (RootClass c : kClasses) n += class_size(c);
    return n;
  }

  /// Delta+ in descending lexicographic order of coordinates. Within row i
  /// the order is 2e_i, e_i+e_{i+1}, ..., e_i+e_d, e_i, e_i-e_d, ..., e_i-e_{i+1}.
  std::vector<Root> positive_roots() const {
    std::vector<Root> out;
    out.reserve(static_cast<std::size_t>(positive_root_count()));
    const int d = static_cast<int>(ambient_dim());
    const Family f = family();
    for (int i = 0; i < d; ++i) {
      if (has_class(f, RootClass::Long)) out.push_back({RootClass::Long, i, -1});
      if (has_class(f, RootClass::Sum)) {
        for (int j = i + 1; j < d; ++j) out.push_back({RootClass::Sum, i, j});
      }
      if (has_class(f, RootClass::Short)) out.push_back({RootClass::Short, i, -1});
      for (int j = d - 1; j > i; --j) out.push_back({RootClass::Difference, i, j});
    }
    return out;
  }

  /// The positive root equal to +-v, if v is a root of the full (signed) system.
  std::optional<std::pair<Root, int>> classify(const WeightVector& v) const {
    if (v.size() != ambient_dim()) fail(ErrorKind::Dimension, "vector length does not match the ambient dimension");
    std::vector<int> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) support.push_back(static_cast<int>(i));
    }
    const Family f = family();
    if (support.size() == 1) {
      const Rational& c = v[support[0]];
      const int s = c.sign();
      if (abs(c) == Rational(1) && has_class(f, RootClass::Short)) return std::make_pair(Root{RootClass::Short, support[0], -1}, s);
      if (abs(c) == Rational(2) && has_class(f, RootClass::Long)) return std::make_pair(Root{RootClass::Long, support[0], -1}, s);
      return std::nullopt;
    }
    if (support.size() == 2) {
      const Rational& a = v[support[0]];
      const Rational& b = v[support[1]];
      if (abs(a) != Rational(1) || abs(b) != Rational(1)) return std::nullopt;
      if (a == -b) return std::make_pair(Root{RootClass::Difference, support[0], support[1]}, a.sign());
      if (has_class(f, RootClass::Sum)) return std::make_pair(Root{RootClass::Sum, support[0], support[1]}, a.sign());
    }
    return std::nullopt;
  }

  bool is_root(const WeightVector& v) const { return classify(v).has_value(); }

 private:
  static constexpr RootClass kClasses[] = {RootClass::Difference, RootClass::Sum, RootClass::Short, RootClass::Long};

  RestrictedType rtype_;
  MultiplicityPattern pattern_;
  std::vector<Root> simple_;
};

inline RootSystem build_system(RestrictedType rtype, MultiplicityPattern pattern) { return RootSystem(rtype, pattern); }

/**
 * Sum of the positive roots weighted by multiplicity, accumulated class by
 * class: coordinate i receives one signed contribution from each root of a
 * class that touches e_i.
 */
inline WeightVector two_rho(const RootSystem& s) {
  const std::int64_t d = static_cast<std::int64_t>(s.ambient_dim());
  const auto& p = s.pattern();
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(d));
  for (std::int64_t i = 0; i < d; ++i) {
    std::int64_t c = 0;
    const std::int64_t later = d - 1 - i;  // roots e_i -+ e_j with j > i
    const std::int64_t earlier = i;        // roots e_j -+ e_i with j < i
    c += static_cast<std::int64_t>(p.difference) * (later - earlier);
    if (has_class(s.family(), RootClass::Sum)) c += static_cast<std::int64_t>(p.sum) * (later + earlier);
    if (has_class(s.family(), RootClass::Short)) c += p.short_root;
    if (has_class(s.family(), RootClass::Long)) c += 2 * static_cast<std::int64_t>(p.long_root);
    coords.emplace_back(c);
  }
  return WeightVector(std::move(coords));
}

/// The highest root of the reduced system spanned by the non-multipliable roots.
inline Root highest_root(const RootSystem& s) {
  switch (s.family()) {
    case Family::A: return {RootClass::Difference, 0, s.rank()};
    case Family::B:
    case Family::D: return {RootClass::Sum, 0, 1};
    case Family::C:
    case Family::BC: return {RootClass::Long, 0, -1};
  }
  return {};
}

/// n = dim G/K = r + sum over Delta+ of multiplicities.
inline std::int64_t dimension(const RootSystem& s) {
  std::int64_t n = s.rank();
  for (RootClass c : {RootClass::Difference, RootClass::Sum, RootClass::Short, RootClass::Long}) {
    n += s.class_size(c) * s.pattern().of(c);
  }
  return n;
}

/// Positive roots alpha with 2*alpha not a root; drops e_i in (BC)_r only.
inline std::vector<Root> non_multipliable_positive_roots(const RootSystem& s) {
  auto roots = s.positive_roots();
  if (s.family() == Family::BC) {
    std::erase_if(roots, [](const Root& a) { return a.cls == RootClass::Short; });
  }
  return roots;
}

inline bool is_dominant(const RootSystem& s, const WeightVector& w) {
  return std::all_of(s.simple_roots().begin(), s.simple_roots().end(),
                     [&](const Root& a) { return a.pair(w).sign() >= 0; });
}

/// max over Delta+ of <alpha, w>, in O(d) per root class.
inline Rational max_root_pairing(const RootSystem& s, const WeightVector& w) {
  if (w.size() != s.ambient_dim()) fail(ErrorKind::Dimension, "vector length does not match the ambient dimension");
  const std::size_t d = w.size();
  std::optional<Rational> best;
  auto offer = [&](const Rational& v) {
    if (!best || v > *best) best = v;
  };

  // e_i - e_j, i < j: running maximum of w_i over the prefix.
  Rational prefix_max = w[0];
  for (std::size_t j = 1; j < d; ++j) {
    offer(prefix_max - w[j]);
    if (w[j] > prefix_max) prefix_max = w[j];
  }
  if (has_class(s.family(), RootClass::Sum) && d >= 2) {
    std::size_t top = 0;
    for (std::size_t i = 1; i < d; ++i) {
      if (w[i] > w[top]) top = i;
    }
    std::optional<std::size_t> second;
    for (std::size_t i = 0; i < d; ++i) {
      if (i != top && (!second || w[i] > w[*second])) second = i;
    }
    offer(w[top] + w[*second]);
  }
  if (has_class(s.family(), RootClass::Short) || has_class(s.family(), RootClass::Long)) {
    const Rational top = *std::max_element(w.begin(), w.end());
    if (has_class(s.family(), RootClass::Short)) offer(top);
    if (has_class(s.family(), RootClass::Long)) offer(top + top);
  }
  if (!best) fail(ErrorKind::DegenerateSystem, "root system has no positive roots");
  return *best;
}

/// Coordinates of v in the simple-root basis; Domain error if v is outside their span.
inline std::vector<Rational> simple_root_coordinates(const RootSystem& s, const WeightVector& v) {
  const std::size_t d = s.ambient_dim();
  const std::size_t r = static_cast<std::size_t>(s.rank());
  if (v.size() != d) fail(ErrorKind::Dimension, "vector length does not match the ambient dimension");
  // Augmented d x (r+1) system: columns are the simple roots.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(r + 1));
  for (std::size_t c = 0; c < r; ++c) {
    const WeightVector col = s.simple_roots()[c].to_vector(d);
    for (std::size_t i = 0; i < d; ++i) m[i][c] = col[i];
  }
  for (std::size_t i = 0; i < d; ++i) m[i][r] = v[i];

  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < r && row < d; ++col) {
    std::size_t p = row;
    while (p < d && m[p][col].is_zero()) ++p;
    if (p == d) continue;
    std::swap(m[p], m[row]);
    const Rational inv = m[row][col].reciprocal();
    for (auto& q : m[row]) q *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j <= r; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < d; ++i) {
    if (!m[i][r].is_zero()) fail(ErrorKind::Domain, v.to_expression() + " is not in the span of the simple roots");
  }
  std::vector<Rational> out(r);
  for (std::size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = m[i][r];
  return out;
}

}  // namespace hdgap
