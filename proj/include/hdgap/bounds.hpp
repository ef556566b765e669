#pragma once

/**
 * @file bounds.hpp
 * @brief Critical-index and homological-dimension bounds per group.
 *
 * With w = 2rho - Theta, the critical index is at most the least k such that
 * the k - r smallest root values <alpha, w> (counted with multiplicity) sum
 * past <w, w>; bounding every value by l = max <alpha, w> gives the closed
 * form n + 1 - <Theta, w>/l. Both are computed exactly. The direct test is
 * the rescaling by |w| of sum alpha(z') > |w| with z' = w/|w|.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hdgap/catalog.hpp"
#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"
#include "hdgap/root_system.hpp"
#include "hdgap/strongly_orthogonal.hpp"
#include "hdgap/weight_vector.hpp"

namespace hdgap {

inline WeightVector w_vector(const RootSystem& s) { return two_rho(s) - theta_closed(s); }

/// <Theta, 2rho - Theta>.
inline Rational theta_pairing(const RootSystem& s) { return pairing(theta_closed(s), w_vector(s)); }

/// max over Delta+ of <alpha, 2rho - Theta>; multiplicities play no role.
inline Rational ell(const RootSystem& s) { return max_root_pairing(s, w_vector(s)); }

namespace detail {

/// Lazily yields the root values of one row in non-increasing order, valid
/// when w is dominant (coordinates non-increasing, all root values >= 0).
struct RootValueStream {
  RootClass cls;
  int i;
  int j;  // next partner index, or the class cursor for Short/Long
  int step;
  int end;

  Rational value(const WeightVector& w) const {
    switch (cls) {
      case RootClass::Difference: return w[i] - w[j];
      case RootClass::Sum: return w[i] + w[j];
      case RootClass::Short: return w[j];
      case RootClass::Long: return w[j] + w[j];
    }
    return {};
  }
  bool advance() {
    j += step;
    return j != end;
  }
};

/// Counts t, the number of largest root values (with multiplicity) whose sum
/// stays strictly below `budget`, never exceeding `cap`.
inline std::int64_t largest_values_below(const RootSystem& s, const WeightVector& w, const Rational& budget,
                                         std::int64_t cap) {
  const int d = static_cast<int>(s.ambient_dim());
  std::vector<RootValueStream> streams;
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) {
      streams.push_back({RootClass::Difference, i, d - 1, -1, i});
      if (has_class(s.family(), RootClass::Sum)) streams.push_back({RootClass::Sum, i, i + 1, 1, d});
    }
  }
  if (has_class(s.family(), RootClass::Short)) streams.push_back({RootClass::Short, -1, 0, 1, d});
  if (has_class(s.family(), RootClass::Long)) streams.push_back({RootClass::Long, -1, 0, 1, d});

  struct Entry {
    Rational value;
    std::size_t stream;
  };
  auto less = [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.stream > b.stream;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  for (std::size_t n = 0; n < streams.size(); ++n) heap.push({streams[n].value(w), n});

  std::int64_t taken = 0;
  Rational acc;
  while (!heap.empty() && taken < cap) {
    Entry top = heap.top();
    heap.pop();
    const std::int64_t mult = s.pattern().of(streams[top.stream].cls);
    std::int64_t copies = mult;
    if (top.value.sign() > 0) {
      // Largest c with acc + c * value < budget.
      const Rational room = (budget - acc) / top.value;
      const mpz_class fit = room.ceil() - 1;
      if (fit < mult) copies = fit < 0 ? 0 : fit.get_si();
    }
    copies = std::min(copies, cap - taken);
    taken += copies;
    if (copies < mult) break;
    acc += top.value * Rational(mult);
    if (streams[top.stream].advance()) heap.push({streams[top.stream].value(w), top.stream});
  }
  return taken;
}

/// Definitional route: sort every root value ascending and accumulate.
inline std::int64_t critical_index_by_sorting(const RootSystem& s, const WeightVector& w) {
  std::vector<std::pair<Rational, int>> values;
  for (const Root& a : s.positive_roots()) values.emplace_back(a.pair(w), s.multiplicity(a));
  std::stable_sort(values.begin(), values.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  const Rational target = norm2(w);
  std::int64_t k = s.rank();
  Rational acc;
  for (const auto& [v, mult] : values) {
    for (int c = 0; c < mult; ++c) {
      acc += v;
      ++k;
      if (acc > target) return k;
    }
  }
  fail(ErrorKind::Infeasibility, s.rtype().name() + ": no k <= n satisfies the critical-index inequality");
}

}  // namespace detail

/**
 * Minimal k in [r+1, n] such that the k - r smallest values <alpha, w>
 * (with multiplicity) sum to more than <w, w>.
 *
 * For dominant w this is computed from the large end: the sum of the k - r
 * smallest exceeds <w, w> exactly when the n - k largest sum to less than
 * <Theta, w>, which needs only the top of each sorted row.
 */
inline std::int64_t critical_index_direct(const RootSystem& s) {
  const WeightVector w = w_vector(s);
  const std::int64_t n = dimension(s);
  const Rational budget = pairing(theta_closed(s), w);
  if (budget.sign() <= 0) {
    fail(ErrorKind::Infeasibility, s.rtype().name() + ": <Theta, 2rho - Theta> = " + budget.to_string() +
                                       " is not positive, no k <= n exists");
  }
  if (!is_dominant(s, w)) return detail::critical_index_by_sorting(s, w);
  const std::int64_t total = n - s.rank();
  const std::int64_t t = detail::largest_values_below(s, w, budget, total - 1);
  return n - t;
}

/// n + 1 - <Theta, w>/l.
inline Rational critical_index_closed(const RootSystem& s, std::int64_t n) {
  const Rational l = ell(s);
  if (l.sign() <= 0) fail(ErrorKind::DegenerateSystem, s.rtype().name() + ": l = " + l.to_string() + " is not positive");
  return Rational(n + 1) - theta_pairing(s) / l;
}

struct BoundReport {
  GroupDescriptor group;
  std::int64_t n = 0;
  WeightVector two_rho;
  WeightVector theta;
  WeightVector w;
  Rational theta_pairing;
  Rational ell;
  std::int64_t k_direct = 0;
  Rational k_closed;
  Rational c;
  /// <Theta, w>/l - c r; the theorem's strict bound holds iff positive.
  Rational margin;
  /// n - c r, the strict upper bound on the homological dimension.
  Rational hd_strict_upper;
  /// n - r, the conjectured sharp value.
  std::int64_t sharpness_reference = 0;
  bool passes = false;
};

struct ReportOptions {
  /// Skip the direct index (set to 0) when only the theorem margin is needed.
  bool direct_index = true;
};

inline BoundReport compute_report(const GroupDescriptor& g, const RootSystem& s, ReportOptions options = {}) {
  BoundReport rep;
  rep.group = g;
  rep.n = dimension(s);
  rep.two_rho = two_rho(s);
  rep.theta = theta_closed(s);
  rep.w = rep.two_rho - rep.theta;
  rep.theta_pairing = pairing(rep.theta, rep.w);
  rep.ell = max_root_pairing(s, rep.w);
  if (rep.ell.sign() <= 0) fail(ErrorKind::DegenerateSystem, g.display_name + ": l is not positive");
  if (rep.theta_pairing.sign() <= 0) {
    fail(ErrorKind::Infeasibility, g.display_name + ": <Theta, 2rho - Theta> is not positive");
  }
  const Rational ratio = rep.theta_pairing / rep.ell;
  rep.k_closed = Rational(rep.n + 1) - ratio;
  rep.c = g.theorem_constant;
  const Rational cr = rep.c * Rational(g.rank);
  rep.margin = ratio - cr;
  rep.hd_strict_upper = Rational(rep.n) - cr;
  rep.sharpness_reference = rep.n - g.rank;
  rep.passes = rep.margin.sign() > 0;
  if (options.direct_index) {
    rep.k_direct = critical_index_direct(s);
    if (Rational(rep.k_direct) > rep.k_closed) {
      fail(ErrorKind::Invariant, g.display_name + ": direct index " + std::to_string(rep.k_direct) +
                                     " exceeds closed-form bound " + rep.k_closed.to_string());
    }
  }
  return rep;
}

inline BoundReport compute_report(const GroupDescriptor& g, ReportOptions options = {}) {
  const RootSystem s = build_system(g.rtype, g.pattern);
  return compute_report(g, s, options);
}

/// <Theta, w>/l at a (large) k, to compare against the stable constant.
inline Rational stable_limit_check(FamilyId id, int r, int k) {
  if (!family_info(id).has_k) {
    fail(ErrorKind::Domain, std::string(family_info(id).display) + " has no parameter k");
  }
  auto [g, s] = resolve(id, r, k);
  return theta_pairing(s) / ell(s);
}

/// Stable constant the ratio approaches as k grows: r/4 for SO_{r,r+k}, r/2
/// for SU_{r,r+k} and Sp_{r,r+k}.
inline Rational stable_limit(FamilyId id, int r) {
  switch (id) {
    case FamilyId::SO_rk: return Rational(r, 4);
    case FamilyId::SU_rk:
    case FamilyId::Sp_rk: return Rational(r, 2);
    default: fail(ErrorKind::Domain, std::string(family_info(id).display) + " has no parameter k");
  }
}

struct GlobalGapSummary {
  struct FamilyConstant {
    FamilyId family;
    Family restricted;
    Rational c;
  };
  std::vector<FamilyConstant> families;
  Rational min_constant;
  std::vector<ExceptionalStub> rank_trivial;
  std::string statement;
};

/// Every classical family has c >= 1/8; exceptional groups have r <= 8 and
/// are dispatched by rank alone.
inline GlobalGapSummary global_gap_check(long r_lo = 2, long r_hi = 8) {
  GlobalGapSummary out;
  std::optional<Rational> min_c;
  for (FamilyId id : kAllFamilies) {
    const FamilyInfo& info = family_info(id);
    const int r = std::max<int>(info.min_rank, static_cast<int>(r_lo));
    const GroupDescriptor g = describe(id, r, info.has_k ? std::optional<int>(std::max(info.min_k, 1)) : std::nullopt);
    out.families.push_back({id, g.rtype.family, g.theorem_constant});
    if (!min_c || g.theorem_constant < *min_c) min_c = g.theorem_constant;
  }
  out.min_constant = *min_c;
  for (const auto& stub : exceptional_stubs()) {
    if (stub.rank >= r_lo && stub.rank <= r_hi) out.rank_trivial.push_back(stub);
  }
  out.statement = "hd_R(Gamma) < n - r/8";
  return out;
}

}  // namespace hdgap
