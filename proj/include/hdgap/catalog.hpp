#pragma once

/**
 * @file catalog.hpp
 * @brief Real simple Lie groups with classical restricted root systems.
 *
 * Each family maps (r, k) to a restricted type and multiplicity pattern, a
 * theorem constant c (1/8 for A, 3/16 for B and D, 1/4 for C and BC) and an
 * independently coded classical formula for dim G/K. Exceptional groups are
 * carried as rank-only stubs.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"
#include "hdgap/root_system.hpp"

namespace hdgap {

enum class FamilyId {
  SLR,         // SL_{r+1}(R)
  SLC,         // SL_{r+1}(C)
  SUStar,      // SU*(2r+2)
  SO_rk,       // SO_{r,r+k}, k >= 1
  SOC_odd,     // SO_{2r+1}(C)
  SpR,         // Sp_r(R)
  SpC,         // Sp_r(C)
  SU_rk,       // SU_{r,r+k}, k >= 0
  Sp_rk,       // Sp_{r,r+k}, k >= 0
  SOStar_4r,   // SO*(4r)
  SOStar_4r2,  // SO*(4r+2)
  SO_rr,       // SO_{r,r}
  SOC_even,    // SO_{2r}(C)
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::SLR,   FamilyId::SLC,   FamilyId::SUStar,    FamilyId::SO_rk,      FamilyId::SOC_odd,
    FamilyId::SpR,   FamilyId::SpC,   FamilyId::SU_rk,     FamilyId::Sp_rk,      FamilyId::SOStar_4r,
    FamilyId::SOStar_4r2, FamilyId::SO_rr, FamilyId::SOC_even,
};

struct FamilyInfo {
  FamilyId id;
  std::string_view key;
  std::string_view display;       // rank-generic display name
  std::string_view multiplicities;  // simple-root multiplicity row, generic form
  bool has_k;
  int min_k;
  int min_rank;
  std::vector<std::string_view> aliases;
};

inline const FamilyInfo& family_info(FamilyId id) {
  static const std::vector<FamilyInfo> table = {
      {FamilyId::SLR, "SLR", "SL_{r+1}(R)", "1,1,...,1", false, 0, 2, {}},
      {FamilyId::SLC, "SLC", "SL_{r+1}(C)", "2,2,...,2", false, 0, 2, {}},
      {FamilyId::SUStar, "SUstar", "SU*(2r+2)", "4,4,...,4", false, 0, 2, {"SU*_{2r+2}", "SU*_{4r+2}"}},
      {FamilyId::SO_rk, "SO_rk", "SO_{r,r+k}", "1,1,...,1,k", true, 1, 2, {"SO_{r,s}"}},
      {FamilyId::SOC_odd, "SOC_odd", "SO_{2r+1}(C)", "2,2,...,2,2", false, 0, 2, {}},
      {FamilyId::SpR, "SpR", "Sp_r(R)", "1,1,...,1,1", false, 0, 2, {}},
      {FamilyId::SpC, "SpC", "Sp_r(C)", "2,2,...,2,2", false, 0, 2, {}},
      {FamilyId::SU_rk, "SU_rk", "SU_{r,r+k}", "2,2,...,2,(2k,1)", true, 0, 2, {"SU_{r,s}"}},
      {FamilyId::Sp_rk, "Sp_rk", "Sp_{r,r+k}", "4,4,...,4,(4k,3)", true, 0, 2, {"Sp_{r,s}"}},
      {FamilyId::SOStar_4r, "SOstar_4r", "SO*(4r)", "4,4,...,4,1", false, 0, 2, {"SO*_{4r}"}},
      {FamilyId::SOStar_4r2, "SOstar_4r2", "SO*(4r+2)", "4,4,...,4,(4,1)", false, 0, 2, {"SO*_{4r+2}"}},
      {FamilyId::SO_rr, "SO_rr", "SO_{r,r}", "1,1,...,1,1", false, 0, 4, {}},
      {FamilyId::SOC_even, "SOC_even", "SO_{2r}(C)", "2,2,...,2,2", false, 0, 4, {}},
  };
  for (const auto& info : table) {
    if (info.id == id) return info;
  }
  fail(ErrorKind::Catalog, "unknown family id");
}

inline std::string_view to_string(FamilyId id) { return family_info(id).key; }

/// Theorem constant c as a function of the restricted type alone.
inline Rational theorem_constant(Family f) {
  switch (f) {
    case Family::A: return Rational(1, 8);
    case Family::B:
    case Family::D: return Rational(3, 16);
    case Family::C:
    case Family::BC: return Rational(1, 4);
  }
  return {};
}

struct GroupDescriptor {
  FamilyId family;
  int rank;
  std::optional<int> k;
  RestrictedType rtype;
  MultiplicityPattern pattern;
  Rational theorem_constant;
  std::string display_name;
};

namespace detail {

inline std::pair<RestrictedType, MultiplicityPattern> family_root_data(FamilyId id, int r, int k) {
  switch (id) {
    case FamilyId::SLR: return {{Family::A, r}, MultiplicityPattern::uniform(Family::A, 1)};
    case FamilyId::SLC: return {{Family::A, r}, MultiplicityPattern::uniform(Family::A, 2)};
    case FamilyId::SUStar: return {{Family::A, r}, MultiplicityPattern::uniform(Family::A, 4)};
    case FamilyId::SO_rk:
      if (k == 0) return {{Family::D, r}, MultiplicityPattern::uniform(Family::D, 1)};
      return {{Family::B, r}, MultiplicityPattern::classical(Family::B, 1, k, 0)};
    case FamilyId::SOC_odd: return {{Family::B, r}, MultiplicityPattern::uniform(Family::B, 2)};
    case FamilyId::SpR: return {{Family::C, r}, MultiplicityPattern::uniform(Family::C, 1)};
    case FamilyId::SpC: return {{Family::C, r}, MultiplicityPattern::uniform(Family::C, 2)};
    case FamilyId::SU_rk:
      if (k == 0) return {{Family::C, r}, MultiplicityPattern::classical(Family::C, 2, 0, 1)};
      return {{Family::BC, r}, MultiplicityPattern::classical(Family::BC, 2, 2 * k, 1)};
    case FamilyId::Sp_rk:
      if (k == 0) return {{Family::C, r}, MultiplicityPattern::classical(Family::C, 4, 0, 3)};
      return {{Family::BC, r}, MultiplicityPattern::classical(Family::BC, 4, 4 * k, 3)};
    case FamilyId::SOStar_4r: return {{Family::C, r}, MultiplicityPattern::classical(Family::C, 4, 0, 1)};
    case FamilyId::SOStar_4r2: return {{Family::BC, r}, MultiplicityPattern::classical(Family::BC, 4, 4, 1)};
    case FamilyId::SO_rr: return {{Family::D, r}, MultiplicityPattern::uniform(Family::D, 1)};
    case FamilyId::SOC_even: return {{Family::D, r}, MultiplicityPattern::uniform(Family::D, 2)};
  }
  fail(ErrorKind::Catalog, "unknown family id");
}

inline std::string display_name(FamilyId id, int r, int k) {
  const auto s = [](long v) { return std::to_string(v); };
  switch (id) {
    case FamilyId::SLR: return "SL_" + s(r + 1) + "(R)";
    case FamilyId::SLC: return "SL_" + s(r + 1) + "(C)";
    case FamilyId::SUStar: return "SU*(" + s(2 * r + 2) + ")";
    case FamilyId::SO_rk: return "SO_{" + s(r) + "," + s(r + k) + "}";
    case FamilyId::SOC_odd: return "SO_" + s(2 * r + 1) + "(C)";
    case FamilyId::SpR: return "Sp_" + s(r) + "(R)";
    case FamilyId::SpC: return "Sp_" + s(r) + "(C)";
    case FamilyId::SU_rk: return "SU_{" + s(r) + "," + s(r + k) + "}";
    case FamilyId::Sp_rk: return "Sp_{" + s(r) + "," + s(r + k) + "}";
    case FamilyId::SOStar_4r: return "SO*(" + s(4 * r) + ")";
    case FamilyId::SOStar_4r2: return "SO*(" + s(4 * r + 2) + ")";
    case FamilyId::SO_rr: return "SO_{" + s(r) + "," + s(r) + "}";
    case FamilyId::SOC_even: return "SO_" + s(2 * r) + "(C)";
  }
  return "?";
}

inline void check_parameters(FamilyId id, int r, std::optional<int> k) {
  const FamilyInfo& info = family_info(id);
  if (r < info.min_rank) {
    fail(ErrorKind::UnsupportedRank, std::string(info.display) + " requires r >= " + std::to_string(info.min_rank) +
                                         ", got r = " + std::to_string(r));
  }
  if (info.has_k) {
    if (!k) fail(ErrorKind::UnsupportedRank, std::string(info.display) + " requires a parameter k");
    if (*k < 0) fail(ErrorKind::UnsupportedRank, std::string(info.display) + " requires k >= 0");
  } else if (k && *k != 0) {
    fail(ErrorKind::UnsupportedRank, std::string(info.display) + " takes no parameter k");
  }
}

}  // namespace detail

/// Descriptor for (family, r, k). k = 0 specializations of the parameterized
/// families resolve to their k = 0 root data (D_r for SO_{r,r}, C_r for
/// SU_{r,r} and Sp_{r,r}).
inline GroupDescriptor describe(FamilyId id, int r, std::optional<int> k = std::nullopt) {
  detail::check_parameters(id, r, k);
  const FamilyInfo& info = family_info(id);
  const int kk = info.has_k ? *k : 0;
  auto [rtype, pattern] = detail::family_root_data(id, r, kk);
  if (r < hdgap::min_rank(rtype.family)) {
    fail(ErrorKind::UnsupportedRank, detail::display_name(id, r, kk) + " has restricted type " + rtype.name() +
                                         ", below the supported rank");
  }
  return GroupDescriptor{id,
                         r,
                         info.has_k ? std::optional<int>(kk) : std::nullopt,
                         rtype,
                         pattern,
                         theorem_constant(rtype.family),
                         detail::display_name(id, r, kk)};
}

inline std::pair<GroupDescriptor, RootSystem> resolve(FamilyId id, int r, std::optional<int> k = std::nullopt) {
  GroupDescriptor g = describe(id, r, k);
  RootSystem s = build_system(g.rtype, g.pattern);
  return {std::move(g), std::move(s)};
}

/// dim G/K from the classical formulas in (p, q) or m, independent of root data.
inline std::int64_t known_dimension(FamilyId id, int r, std::optional<int> k = std::nullopt) {
  detail::check_parameters(id, r, k);
  const std::int64_t R = r;
  const std::int64_t K = k.value_or(0);
  switch (id) {
    case FamilyId::SLR: return R * (R + 3) / 2;
    case FamilyId::SLC: return (R + 1) * (R + 1) - 1;
    case FamilyId::SUStar: return 2 * R * R + 3 * R;
    case FamilyId::SO_rk: return R * (R + K);  // SO_{p,q}: pq
    case FamilyId::SOC_odd: {
      const std::int64_t m = 2 * R + 1;  // SO_m(C): m(m-1)/2
      return m * (m - 1) / 2;
    }
    case FamilyId::SpR: return R * (R + 1);
    case FamilyId::SpC: return R * (2 * R + 1);
    case FamilyId::SU_rk: return 2 * R * (R + K);  // SU_{p,q}: 2pq
    case FamilyId::Sp_rk: return 4 * R * (R + K);  // Sp_{p,q}: 4pq
    case FamilyId::SOStar_4r: {
      const std::int64_t m = 2 * R;  // SO*(2m): m(m-1)
      return m * (m - 1);
    }
    case FamilyId::SOStar_4r2: {
      const std::int64_t m = 2 * R + 1;
      return m * (m - 1);
    }
    case FamilyId::SO_rr: return R * R;
    case FamilyId::SOC_even: {
      const std::int64_t m = 2 * R;
      return m * (m - 1) / 2;
    }
  }
  fail(ErrorKind::Catalog, "unknown family id");
}

/// Exceptional group carried only by its real rank.
struct ExceptionalStub {
  std::string_view name;
  int rank;
  std::string_view restricted_type;
};

inline std::span<const ExceptionalStub> exceptional_stubs() {
  static constexpr ExceptionalStub stubs[] = {
      {"E6^{-26}", 2, "A_2"},
      {"E6^{-14}", 2, "BC_2"},
      {"E7^{-25}", 3, "C_3"},
      {"E8 (split)", 8, "E_8"},
  };
  return stubs;
}

/// Family selector as accepted on the command line: a family, optionally with
/// k pinned (the single-letter aliases name the split or canonical member).
struct FamilySelector {
  FamilyId family;
  std::optional<int> fixed_k;
  std::string label;
};

inline std::optional<FamilySelector> parse_family_selector(std::string_view text) {
  if (text == "A") return FamilySelector{FamilyId::SLR, std::nullopt, "A"};
  if (text == "B") return FamilySelector{FamilyId::SO_rk, 1, "B"};
  if (text == "C") return FamilySelector{FamilyId::SpR, std::nullopt, "C"};
  if (text == "D") return FamilySelector{FamilyId::SO_rr, std::nullopt, "D"};
  if (text == "BC") return FamilySelector{FamilyId::SU_rk, 1, "BC"};
  if (text == "SU_rr") return FamilySelector{FamilyId::SU_rk, 0, "SU_rr"};
  if (text == "Sp_rr") return FamilySelector{FamilyId::Sp_rk, 0, "Sp_rr"};
  for (FamilyId id : kAllFamilies) {
    const FamilyInfo& info = family_info(id);
    if (text == info.key || text == info.display) return FamilySelector{id, std::nullopt, std::string(info.key)};
    for (auto alias : info.aliases) {
      if (text == alias) return FamilySelector{id, std::nullopt, std::string(info.key)};
    }
  }
  return std::nullopt;
}

/// k values enumerated for a family over a k range. SO_{r,r+0} is the
/// separate SO_{r,r} entry; SU_{r,r} and Sp_{r,r} appear as k = 0 whenever
/// the range starts at or below 1.
inline std::vector<std::optional<int>> catalog_k_values(FamilyId id, long k_lo, long k_hi) {
  const FamilyInfo& info = family_info(id);
  if (!info.has_k) return {std::nullopt};
  std::vector<std::optional<int>> out;
  if (info.min_k == 0 && k_lo <= 1 && k_hi >= 0) out.emplace_back(0);
  for (long k = std::max<long>(k_lo, 1); k <= k_hi; ++k) out.emplace_back(static_cast<int>(k));
  return out;
}

struct CatalogListing {
  std::vector<GroupDescriptor> groups;
  std::vector<ExceptionalStub> stubs;
};

/// Every instantiable descriptor in canonical (family, r, k) order, plus the
/// exceptional stubs whose rank falls in the range.
inline CatalogListing list_catalog(long r_lo, long r_hi, long k_lo, long k_hi) {
  CatalogListing out;
  for (FamilyId id : kAllFamilies) {
    const FamilyInfo& info = family_info(id);
    for (long r = std::max<long>(r_lo, info.min_rank); r <= r_hi; ++r) {
      for (auto k : catalog_k_values(id, k_lo, k_hi)) out.groups.push_back(describe(id, static_cast<int>(r), k));
    }
  }
  for (const auto& stub : exceptional_stubs()) {
    if (stub.rank >= r_lo && stub.rank <= r_hi) out.stubs.push_back(stub);
  }
  return out;
}

}  // namespace hdgap
