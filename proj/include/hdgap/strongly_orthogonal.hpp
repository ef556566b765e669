#pragma once

/**
 * @file strongly_orthogonal.hpp
 * @brief Theta, the half sum of a maximal strongly orthogonal system.
 *
 * Two independent routes: the tabulated simple-root coefficient schedules
 * (theta_closed) and an exhaustive search over strongly orthogonal subsets
 * of the non-multipliable positive roots (theta_oracle). "Maximal" is taken
 * as maximum cardinality; among maximum systems the half sum lying in the
 * closed dominant chamber is selected, and it must be unique.
 */

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"
#include "hdgap/root_system.hpp"
#include "hdgap/weight_vector.hpp"

namespace hdgap {

enum class Parity { Any, Odd, Even };

inline std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Any: return "any";
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
  }
  return "?";
}

inline bool parity_matches(Parity p, long r) {
  return p == Parity::Any || (p == Parity::Odd) == (r % 2 != 0);
}

/// Simple-root coefficient schedule of Theta for one family and rank parity.
struct ThetaSpec {
  Family family;
  Parity parity;
  std::string_view formula;
  /// Coefficient of alpha_i (1-based i) at rank r.
  Rational (*coefficient)(int i, int r);
};

namespace detail {

inline Rational theta_a_odd(int i, int r) {
  return i <= (r - 1) / 2 ? Rational(i, 2) : Rational(r - i + 1, 2);
}
inline Rational theta_a_even(int i, int r) {
  if (i <= r / 2) return Rational(i, 2);
  if (i == r / 2 + 1) return Rational(r, 4);
  return Rational(r - i + 1, 2);
}
inline Rational theta_b_odd(int i, int r) { return i <= (r - 1) / 2 ? Rational(i) : Rational(r, 2); }
inline Rational theta_b_even(int i, int r) { return i <= r / 2 ? Rational(i) : Rational(r, 2); }
inline Rational theta_c(int i, int r) { return i <= r - 1 ? Rational(i) : Rational(r, 2); }
inline Rational theta_d_odd(int i, int r) {
  if (i <= (r - 1) / 2) return Rational(i);
  if (i <= r - 2) return Rational(r - 1, 2);
  return Rational(r - 1, 4);
}
inline Rational theta_d_even(int i, int r) {
  if (i <= r / 2) return Rational(i);
  if (i <= r - 2) return Rational(r, 2);
  return Rational(r, 4);
}
// alpha_r = e_r here, so the last coefficient doubles relative to C_r.
inline Rational theta_bc(int i, int r) { return i <= r - 1 ? Rational(i) : Rational(r); }

inline constexpr ThetaSpec kThetaSpecs[] = {
    {Family::A, Parity::Odd, "sum_{i=1}^{(r-1)/2} (i/2) a_i + sum_{i=(r+1)/2}^{r} ((r-i+1)/2) a_i", theta_a_odd},
    {Family::A, Parity::Even, "sum_{i=1}^{r/2} (i/2) a_i + (r/4) a_{r/2+1} + sum_{i=r/2+2}^{r} ((r-i+1)/2) a_i", theta_a_even},
    {Family::B, Parity::Odd, "sum_{i=1}^{(r-1)/2} i a_i + sum_{i=(r+1)/2}^{r} (r/2) a_i", theta_b_odd},
    {Family::B, Parity::Even, "sum_{i=1}^{r/2} i a_i + sum_{i=r/2+1}^{r} (r/2) a_i", theta_b_even},
    {Family::C, Parity::Any, "sum_{i=1}^{r-1} i a_i + (r/2) a_r", theta_c},
    {Family::D, Parity::Odd, "sum_{i=1}^{(r-1)/2} i a_i + sum_{i=(r+1)/2}^{r-2} ((r-1)/2) a_i + ((r-1)/4)(a_{r-1} + a_r)", theta_d_odd},
    {Family::D, Parity::Even, "sum_{i=1}^{r/2} i a_i + sum_{i=r/2+1}^{r-2} (r/2) a_i + (r/4)(a_{r-1} + a_r)", theta_d_even},
    {Family::BC, Parity::Any, "sum_{i=1}^{r-1} i a_i + r a_r", theta_bc},
};

}  // namespace detail

inline std::span<const ThetaSpec> theta_specs() { return detail::kThetaSpecs; }

inline const ThetaSpec& theta_spec_for(RestrictedType t) {
  for (const auto& spec : detail::kThetaSpecs) {
    if (spec.family == t.family && parity_matches(spec.parity, t.rank)) return spec;
  }
  fail(ErrorKind::UnsupportedFamily, "no Theta schedule for " + t.name());
}

inline std::vector<Rational> theta_coefficients(RestrictedType t) {
  const ThetaSpec& spec = theta_spec_for(t);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(t.rank));
  for (int i = 1; i <= t.rank; ++i) out.push_back(spec.coefficient(i, t.rank));
  return out;
}

/// sum_i coeffs[i] * alpha_i in the e-basis.
inline WeightVector coeffs_to_ebasis(std::span<const Rational> coeffs, const RootSystem& s) {
  if (coeffs.size() != static_cast<std::size_t>(s.rank())) {
    fail(ErrorKind::Dimension, "expected " + std::to_string(s.rank()) + " simple-root coefficients, got " +
                                   std::to_string(coeffs.size()));
  }
  WeightVector v(s.ambient_dim());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Rational& c = coeffs[n];
    if (c.is_zero()) continue;
    const Root& a = s.simple_roots()[n];
    switch (a.cls) {
      case RootClass::Difference: v[a.i] += c; v[a.j] -= c; break;
      case RootClass::Sum: v[a.i] += c; v[a.j] += c; break;
      case RootClass::Short: v[a.i] += c; break;
      case RootClass::Long: v[a.i] += c + c; break;
    }
  }
  return v;
}

inline WeightVector theta_closed(const RootSystem& s) {
  const auto coeffs = theta_coefficients(s.rtype());
  return coeffs_to_ebasis(coeffs, s);
}

/// Neither a+b nor a-b is a root of the full system (multipliable roots included).
inline bool is_strongly_orthogonal(const WeightVector& a, const WeightVector& b, const RootSystem& s) {
  if (!s.is_root(a)) fail(ErrorKind::Domain, a.to_expression() + " is not a root of " + s.rtype().name());
  if (!s.is_root(b)) fail(ErrorKind::Domain, b.to_expression() + " is not a root of " + s.rtype().name());
  return !s.is_root(a + b) && !s.is_root(a - b);
}

struct StronglyOrthogonalSystem {
  std::vector<Root> roots;

  WeightVector half_sum(std::size_t ambient) const {
    WeightVector v(ambient);
    for (const auto& a : roots) v += a.to_vector(ambient);
    return v * Rational(1, 2);
  }
};

struct SearchOptions {
  int rank_cap = 6;
};

/**
 * All strongly orthogonal subsets of the non-multipliable positive roots of
 * maximum cardinality, by clique search over the compatibility graph with
 * canonical-order branching and a remaining-capacity bound. Output follows
 * the canonical root order lexicographically.
 */
inline std::vector<StronglyOrthogonalSystem> enumerate_max_sos(const RootSystem& s, SearchOptions options = {}) {
  if (s.rank() > options.rank_cap) {
    fail(ErrorKind::SearchCap, s.rtype().name() + " exceeds the exhaustive search cap r <= " +
                                   std::to_string(options.rank_cap) + "; use the closed-form Theta instead");
  }
  const auto candidates = non_multipliable_positive_roots(s);
  const std::size_t n = candidates.size();
  if (n > 64) fail(ErrorKind::SearchCap, "more than 64 candidate roots");

  const std::size_t d = s.ambient_dim();
  std::vector<WeightVector> vecs;
  vecs.reserve(n);
  for (const auto& a : candidates) vecs.push_back(a.to_vector(d));

  std::vector<std::uint64_t> compatible(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (is_strongly_orthogonal(vecs[a], vecs[b], s)) {
        compatible[a] |= std::uint64_t{1} << b;
        compatible[b] |= std::uint64_t{1} << a;
      }
    }
  }

  std::size_t best = 0;
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;

  std::function<void(std::uint64_t)> search = [&](std::uint64_t open) {
    if (open == 0) {
      if (current.size() > best) {
        best = current.size();
        found.clear();
      }
      if (current.size() == best) found.push_back(current);
      return;
    }
    while (open != 0) {
      if (current.size() + static_cast<std::size_t>(std::popcount(open)) < best) return;
      const int v = std::countr_zero(open);
      open &= open - 1;
      current.push_back(static_cast<std::size_t>(v));
      search(open & compatible[static_cast<std::size_t>(v)]);
      current.pop_back();
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search(all);

  std::vector<StronglyOrthogonalSystem> out;
  out.reserve(found.size());
  for (const auto& idx : found) {
    StronglyOrthogonalSystem sys;
    for (std::size_t v : idx) sys.roots.push_back(candidates[v]);
    out.push_back(std::move(sys));
  }
  return out;
}

struct OracleResult {
  std::vector<StronglyOrthogonalSystem> systems;
  /// Distinct half sums in lexicographic order.
  std::vector<WeightVector> half_sums;
  std::vector<WeightVector> dominant;
  bool equal_norms = true;
};

/// Full oracle record; does not throw on ambiguity (see theta_oracle).
inline OracleResult run_theta_oracle(const RootSystem& s, SearchOptions options = {}) {
  OracleResult out;
  out.systems = enumerate_max_sos(s, options);
  std::set<WeightVector> distinct;
  for (const auto& sys : out.systems) distinct.insert(sys.half_sum(s.ambient_dim()));
  out.half_sums.assign(distinct.begin(), distinct.end());
  for (const auto& h : out.half_sums) {
    if (is_dominant(s, h)) out.dominant.push_back(h);
    if (norm2(h) != norm2(out.half_sums.front())) out.equal_norms = false;
  }
  return out;
}

inline WeightVector theta_oracle(const RootSystem& s, SearchOptions options = {}) {
  OracleResult result = run_theta_oracle(s, options);
  if (result.dominant.size() != 1) {
    fail(ErrorKind::OracleAmbiguity, s.rtype().name() + ": " + std::to_string(result.dominant.size()) +
                                         " distinct dominant half sums among " + std::to_string(result.half_sums.size()));
  }
  return result.dominant.front();
}

}  // namespace hdgap
