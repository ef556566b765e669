#pragma once

/**
 * @file commands.hpp
 * @brief The list, table, bounds, verify and oracle commands as library calls.
 *
 * Each command returns a ReportDocument and an exit status: 0 when every
 * check passes, 1 on a verification failure. Errors surface as hdgap::Error;
 * exit_code_for maps them to 2 (usage) or 3 (internal).
 */

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hdgap/bounds.hpp"
#include "hdgap/catalog.hpp"
#include "hdgap/error.hpp"
#include "hdgap/report.hpp"
#include "hdgap/root_system.hpp"
#include "hdgap/strongly_orthogonal.hpp"
#include "hdgap/verify.hpp"

namespace hdgap {

struct CommandOptions {
  std::optional<std::string> family;
  bool all = false;
  std::optional<IntRange> ranks;
  std::optional<IntRange> ks;
  Format format = Format::Json;
  bool decimal = false;
  int cap = 6;
  bool rows = false;
  IntRange fit_ranks{2, 40};
  IntRange fit_ks{1, 20};
  int direct_index_max_rank = 50;
};

struct CommandResult {
  ReportDocument doc;
  int exit_code = 0;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain:
    case ErrorKind::UnsupportedRank:
    case ErrorKind::Pattern:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::SearchCap:
    case ErrorKind::Catalog: return 2;
    default: return 3;
  }
}

inline std::string range_text(IntRange r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

/// "a..b" or a single integer "a".
inline IntRange parse_range(std::string_view text) {
  const auto parse_int = [&](std::string_view s) {
    long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
      fail(ErrorKind::Domain, "invalid range '" + std::string(text) + "' (expected a..b or a)");
    }
    return v;
  };
  IntRange r;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    r = IntRange{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  } else {
    const long v = parse_int(text);
    r = IntRange{v, v};
  }
  if (r.empty()) fail(ErrorKind::Domain, "empty range '" + std::string(text) + "'");
  return r;
}

/**
 * Reads a JSON config. Recognised keys: ranks, ks, fit_ranks, fit_ks (range
 * strings), cap, direct_index_max_rank (integers), format (string), decimal
 * (boolean). Unknown keys are rejected.
 */
inline void apply_config(CommandOptions& opt, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Domain, "cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Domain, "config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::Domain, "config file must hold a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      if (key == "ranks") opt.ranks = parse_range(it->get<std::string>());
      else if (key == "ks") opt.ks = parse_range(it->get<std::string>());
      else if (key == "fit_ranks") opt.fit_ranks = parse_range(it->get<std::string>());
      else if (key == "fit_ks") opt.fit_ks = parse_range(it->get<std::string>());
      else if (key == "cap") opt.cap = it->get<int>();
      else if (key == "direct_index_max_rank") opt.direct_index_max_rank = it->get<int>();
      else if (key == "format") opt.format = parse_format(it->get<std::string>());
      else if (key == "decimal") opt.decimal = it->get<bool>();
      else fail(ErrorKind::Domain, "unknown config key '" + key + "'");
    }
  } catch (const Json::type_error& e) {
    fail(ErrorKind::Domain, "config file '" + path + "': " + e.what());
  }
}

namespace detail {

inline std::vector<FamilySelector> selected_families(const CommandOptions& opt) {
  if (!opt.family) {
    std::vector<FamilySelector> all;
    for (FamilyId id : kAllFamilies) all.push_back({id, std::nullopt, std::string(family_info(id).key)});
    return all;
  }
  auto sel = parse_family_selector(*opt.family);
  if (!sel) fail(ErrorKind::Catalog, "unknown family '" + *opt.family + "'");
  return {*sel};
}

struct Instance {
  FamilyId family;
  int r;
  std::optional<int> k;
};

/// Canonical (family, r, k) enumeration of the selection.
inline std::vector<Instance> instances(const CommandOptions& opt, IntRange default_ranks, IntRange default_ks) {
  const IntRange ranks = opt.ranks.value_or(default_ranks);
  const IntRange ks = opt.ks.value_or(default_ks);
  std::vector<Instance> out;
  for (const auto& sel : selected_families(opt)) {
    const FamilyInfo& info = family_info(sel.family);
    if (opt.family && ranks.hi < info.min_rank) {
      fail(ErrorKind::UnsupportedRank, std::string(info.display) + " requires r >= " + std::to_string(info.min_rank) +
                                           ", got r in " + range_text(ranks));
    }
    const auto kvals = sel.fixed_k ? std::vector<std::optional<int>>{sel.fixed_k}
                                   : catalog_k_values(sel.family, ks.lo, ks.hi);
    for (long r = std::max<long>(ranks.lo, info.min_rank); r <= ranks.hi; ++r) {
      for (const auto& k : kvals) out.push_back({sel.family, static_cast<int>(r), k});
    }
  }
  return out;
}

inline std::string ks_flag(const CommandOptions& opt, IntRange default_ks) {
  return " --ks " + range_text(opt.ks.value_or(default_ks));
}

inline std::string family_flag(const CommandOptions& opt) { return opt.family ? " --family " + *opt.family : ""; }

inline Json string_array(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

inline std::string delta_plus_text(Family f) {
  switch (f) {
    case Family::A: return "{e_i - e_j | i < j}";
    case Family::B: return "{e_i +- e_j | i < j} u {e_i}";
    case Family::C: return "{e_i +- e_j | i < j} u {2e_i}";
    case Family::D: return "{e_i +- e_j | i < j}";
    case Family::BC: return "{e_i +- e_j | i < j} u {e_i, 2e_i}";
  }
  return "?";
}

/// Multiplicity of each simple root; a BC short simple root carries the pair
/// (mult e_r, mult 2e_r).
inline std::vector<std::string> simple_multiplicities(const RootSystem& s) {
  std::vector<std::string> out;
  for (const Root& a : s.simple_roots()) {
    if (s.family() == Family::BC && a.cls == RootClass::Short) {
      out.push_back("(" + std::to_string(s.pattern().short_root) + "," + std::to_string(s.pattern().long_root) + ")");
    } else {
      out.push_back(std::to_string(s.multiplicity(a)));
    }
  }
  return out;
}

}  // namespace detail

inline CommandResult run_list(const CommandOptions& opt) {
  CommandResult res;
  res.doc.command = "list";
  for (FamilyId id : kAllFamilies) {
    const FamilyInfo& info = family_info(id);
    const GroupDescriptor g = describe(id, std::max(info.min_rank, 4), info.has_k ? std::optional<int>(1) : std::nullopt);
    Json row = Json::object();
    row["family"] = std::string(info.key);
    row["group"] = std::string(info.display);
    row["restricted_type"] = std::string(to_string(g.rtype.family)) + "_r";
    row["multiplicities"] = std::string(info.multiplicities);
    row["parameter"] = info.has_k ? Json("k >= " + std::to_string(info.min_k)) : Json(nullptr);
    std::string k0;
    if (id == FamilyId::SU_rk) k0 = "k = 0 is SU_{r,r}, type C_r";
    if (id == FamilyId::Sp_rk) k0 = "k = 0 is Sp_{r,r}, type C_r";
    if (id == FamilyId::SO_rk) k0 = "k = 0 is the separate SO_rr entry";
    row["note"] = k0.empty() ? Json(nullptr) : Json(k0);
    row["min_rank"] = info.min_rank;
    put_rational(row, "c", g.theorem_constant, opt.decimal);
    std::vector<std::string> aliases(info.aliases.begin(), info.aliases.end());
    row["aliases"] = detail::string_array(aliases);
    res.doc.rows.push_back(std::move(row));
  }
  Json stubs = Json::array();
  for (const auto& stub : exceptional_stubs()) {
    Json row = Json::object();
    row["group"] = std::string(stub.name);
    row["rank"] = stub.rank;
    row["restricted_type"] = std::string(stub.restricted_type);
    row["status"] = "rank-trivial (r <= 8)";
    stubs.push_back(std::move(row));
  }
  res.doc.sections.emplace_back("exceptional_stubs", std::move(stubs));
  const GlobalGapSummary gap = global_gap_check();
  Json g = Json::object();
  g["min_c"] = gap.min_constant.to_string();
  g["statement"] = gap.statement;
  res.doc.status = std::move(g);
  return res;
}

inline CommandResult run_table_root_data(const CommandOptions& opt) {
  const IntRange dr{2, 6};
  const IntRange dk{1, 1};
  CommandResult res;
  res.doc.command = "table root-data" + detail::family_flag(opt) + " --ranks " + range_text(opt.ranks.value_or(dr)) +
                    detail::ks_flag(opt, dk);
  for (const auto& inst : detail::instances(opt, dr, dk)) {
    auto [g, s] = resolve(inst.family, inst.r, inst.k);
    Json row = Json::object();
    row["group"] = g.display_name;
    row["family"] = std::string(to_string(g.family));
    row["type"] = g.rtype.name();
    row["r"] = g.rank;
    row["k"] = optional_int(g.k);
    std::vector<std::string> simple;
    for (const Root& a : s.simple_roots()) simple.push_back(a.to_string());
    row["simple_roots"] = detail::string_array(simple);
    row["multiplicities"] = detail::string_array(detail::simple_multiplicities(s));
    row["delta_plus"] = detail::delta_plus_text(s.family());
    row["positive_root_count"] = s.positive_root_count();
    row["two_rho"] = vector_json(two_rho(s));
    row["two_rho_expr"] = two_rho(s).to_expression();
    std::vector<std::string> coeffs;
    for (const auto& c : theta_coefficients(s.rtype())) coeffs.push_back(c.to_string());
    row["theta_coefficients"] = detail::string_array(coeffs);
    row["theta"] = vector_json(theta_closed(s));
    row["theta_expr"] = theta_closed(s).to_expression();
    row["n"] = dimension(s);
    res.doc.rows.push_back(std::move(row));
  }
  return res;
}

inline CommandResult run_bounds(const CommandOptions& opt, const std::string& name = "bounds") {
  const IntRange dr{2, 6};
  const IntRange dk{1, 1};
  CommandResult res;
  res.doc.command = name + detail::family_flag(opt) + " --ranks " + range_text(opt.ranks.value_or(dr)) +
                    detail::ks_flag(opt, dk);
  std::int64_t failed = 0;
  for (const auto& inst : detail::instances(opt, dr, dk)) {
    const GroupDescriptor g = describe(inst.family, inst.r, inst.k);
    const bool direct = inst.r <= opt.direct_index_max_rank;
    const BoundReport rep = compute_report(g, ReportOptions{direct});
    if (!rep.passes) ++failed;
    res.doc.rows.push_back(bound_row(rep, opt.decimal, direct));
  }
  Json status = Json::object();
  status["passed"] = failed == 0;
  status["instances"] = res.doc.rows.size();
  status["failures"] = failed;
  res.doc.status = std::move(status);
  res.exit_code = failed == 0 ? 0 : 1;
  return res;
}

inline Json fit_row(FamilyId family, const FitResult& f) {
  Json row = Json::object();
  row["family"] = std::string(family_info(family).key);
  row["label"] = f.label;
  row["quantity"] = std::string(to_string(f.quantity));
  row["fixed_k"] = optional_int(f.fixed_k);
  row["fit_ranks"] = range_text(f.fit_ranks);
  row["fitted"] = f.error.empty() ? Json(f.fitted.to_string()) : Json(nullptr);
  row["printed"] = f.printed.to_string();
  row["matches_printed"] = f.matches_printed;
  row["accepted"] = f.accepted;
  row["error"] = f.error.empty() ? Json(nullptr) : Json(f.error);
  return row;
}

inline Json certificate_row(FamilyId family, const CertificateResult& c) {
  Json row = Json::object();
  row["family"] = std::string(family_info(family).key);
  row["label"] = c.label;
  row["margin_polynomial"] = c.margin_polynomial.to_string();
  row["ranks"] = range_text(c.ranks);
  row["ks"] = c.ks ? Json(range_text(*c.ks)) : Json(nullptr);
  row["positive"] = c.certificate.positive;
  row["points_checked"] = c.certificate.points_checked;
  row["leading_sign"] = c.certificate.leading_sign;
  row["counterexample"] = c.certificate.counterexample
                              ? Json(std::to_string(c.certificate.counterexample->first) + "," +
                                     std::to_string(c.certificate.counterexample->second))
                              : Json(nullptr);
  return row;
}

/// Verification of the selected families over the sweep and fit ranges.
inline CommandResult run_verify(const CommandOptions& opt) {
  if (opt.all == opt.family.has_value()) fail(ErrorKind::Domain, "verify needs exactly one of --all or --family");
  VerifyOptions vo;
  vo.sweep_ranks = opt.ranks.value_or(vo.sweep_ranks);
  vo.sweep_ks = opt.ks.value_or(vo.sweep_ks);
  vo.fit_ranks = opt.fit_ranks;
  vo.fit_ks = opt.fit_ks;
  vo.direct_index_max_rank = opt.direct_index_max_rank;
  vo.keep_rows = opt.rows;

  CommandResult res;
  res.doc.command = "verify" + (opt.all ? std::string(" --all") : detail::family_flag(opt)) + " --ranks " +
                    range_text(vo.sweep_ranks) + " --ks " + range_text(vo.sweep_ks) + " --fit-ranks " +
                    range_text(vo.fit_ranks) + " --fit-ks " + range_text(vo.fit_ks);

  Json fits = Json::array();
  Json certs = Json::array();
  Json failures = Json::array();
  Json instance_rows = Json::array();
  std::int64_t instances = 0;
  std::int64_t passed = 0;
  std::int64_t fit_count = 0;
  std::int64_t fit_printed = 0;
  std::int64_t undocumented = 0;
  bool all_ok = true;
  for (const auto& sel : detail::selected_families(opt)) {
    const FamilySummary sum = verify_family(sel.family, sel.fixed_k, vo);
    all_ok = all_ok && sum.ok();
    instances += sum.instances;
    passed += sum.passed;

    std::int64_t fam_printed = 0;
    std::int64_t fam_accepted = 0;
    for (const auto& f : sum.fits) {
      fits.push_back(fit_row(sel.family, f));
      ++fit_count;
      if (f.matches_printed) ++fam_printed;
      if (f.accepted) ++fam_accepted;
    }
    fit_printed += fam_printed;
    std::int64_t certs_positive = 0;
    for (const auto& c : sum.certificates) {
      certs.push_back(certificate_row(sel.family, c));
      if (c.certificate.positive) ++certs_positive;
    }
    for (const auto& f : sum.findings) {
      res.doc.findings.push_back(finding_row(f));
      if (!f.documented) ++undocumented;
    }
    for (const auto& f : sum.failures) {
      Json row = Json::object();
      row["group"] = f.group;
      row["r"] = f.r;
      row["k"] = optional_int(f.k);
      row["reason"] = f.reason;
      failures.push_back(std::move(row));
    }
    for (const auto& rep : sum.rows) instance_rows.push_back(bound_row(rep, opt.decimal, rep.group.rank <= vo.direct_index_max_rank));

    Json row = Json::object();
    row["family"] = std::string(family_info(sel.family).key);
    row["label"] = sum.label;
    row["ranks"] = range_text(vo.sweep_ranks);
    row["instances"] = sum.instances;
    row["passed"] = sum.passed;
    row["failed"] = sum.instances - sum.passed;
    if (sum.tightest) {
      row["tightest_group"] = sum.tightest->group.display_name;
      put_rational(row, "tightest_margin", sum.tightest->margin, opt.decimal);
    } else {
      row["tightest_group"] = nullptr;
      row["tightest_margin"] = nullptr;
    }
    row["fits"] = sum.fits.size();
    row["fits_matching_printed"] = fam_printed;
    row["fits_accepted"] = fam_accepted;
    row["certificates"] = sum.certificates.size();
    row["certificates_positive"] = certs_positive;
    row["findings"] = sum.findings.size();
    row["ok"] = sum.ok();
    res.doc.rows.push_back(std::move(row));
  }

  Json status = Json::object();
  status["passed"] = all_ok;
  status["instances"] = instances;
  status["instances_passed"] = passed;
  status["fits"] = fit_count;
  status["fits_matching_printed"] = fit_printed;
  status["findings"] = res.doc.findings.size();
  status["undocumented_findings"] = undocumented;
  res.doc.status = std::move(status);
  res.doc.sections.emplace_back("fits", std::move(fits));
  res.doc.sections.emplace_back("certificates", std::move(certs));
  res.doc.sections.emplace_back("failures", std::move(failures));
  if (opt.rows) res.doc.sections.emplace_back("instances", std::move(instance_rows));
  res.exit_code = all_ok ? 0 : 1;
  return res;
}

/// Root system for the oracle: a bare restricted type letter (multiplicities
/// are irrelevant to strong orthogonality) or a catalog family.
inline std::pair<std::string, RootSystem> oracle_system(const std::string& family, int r, std::optional<int> k) {
  static const std::pair<const char*, Family> letters[] = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D}, {"BC", Family::BC}};
  for (const auto& [name, f] : letters) {
    if (family != name) continue;
    const RestrictedType t{f, r};
    const MultiplicityPattern p =
        f == Family::BC ? MultiplicityPattern::classical(f, 2, 2, 1) : MultiplicityPattern::uniform(f, 1);
    return {t.name(), RootSystem(t, p)};
  }
  auto sel = parse_family_selector(family);
  if (!sel) fail(ErrorKind::Catalog, "unknown family '" + family + "'");
  const bool has_k = family_info(sel->family).has_k;
  auto [g, s] = resolve(sel->family, r, has_k ? std::optional<int>(sel->fixed_k.value_or(k.value_or(1))) : std::nullopt);
  return {g.display_name + " (" + g.rtype.name() + ")", std::move(s)};
}

inline CommandResult run_oracle(const CommandOptions& opt) {
  if (!opt.family) fail(ErrorKind::Domain, "oracle needs --family");
  const IntRange ranks = opt.ranks.value_or(IntRange{2, 2});
  CommandResult res;
  res.doc.command = "oracle --family " + *opt.family + " --ranks " + range_text(ranks) + " --cap " + std::to_string(opt.cap);
  Json summary = Json::array();
  bool all_agree = true;
  for (long r = ranks.lo; r <= ranks.hi; ++r) {
    auto [name, s] = oracle_system(*opt.family, static_cast<int>(r), opt.ks ? std::optional<int>(static_cast<int>(opt.ks->lo)) : std::nullopt);
    const OracleResult out = run_theta_oracle(s, SearchOptions{opt.cap});
    const WeightVector closed = theta_closed(s);
    const std::size_t d = s.ambient_dim();
    for (std::size_t i = 0; i < out.systems.size(); ++i) {
      const auto& sys = out.systems[i];
      std::vector<std::string> roots;
      for (const Root& a : sys.roots) roots.push_back(a.to_string());
      const WeightVector h = sys.half_sum(d);
      Json row = Json::object();
      row["system"] = name;
      row["r"] = r;
      row["index"] = i;
      row["roots"] = detail::string_array(roots);
      row["half_sum"] = h.to_expression();
      row["dominant"] = is_dominant(s, h);
      row["equals_theta_closed"] = h == closed;
      res.doc.rows.push_back(std::move(row));
    }
    const bool unique = out.dominant.size() == 1;
    const bool agrees = unique && out.dominant.front() == closed;
    all_agree = all_agree && agrees;
    Json row = Json::object();
    row["system"] = name;
    row["r"] = r;
    row["max_size"] = out.systems.empty() ? 0 : out.systems.front().roots.size();
    row["systems"] = out.systems.size();
    row["distinct_half_sums"] = out.half_sums.size();
    row["dominant_half_sums"] = out.dominant.size();
    row["dominant"] = unique ? Json(out.dominant.front().to_expression()) : Json(nullptr);
    row["theta_closed"] = closed.to_expression();
    row["agrees"] = agrees;
    row["equal_norms"] = out.equal_norms;
    summary.push_back(std::move(row));
  }
  Json status = Json::object();
  status["passed"] = all_agree;
  res.doc.status = std::move(status);
  res.doc.sections.emplace_back("summary", std::move(summary));
  res.exit_code = all_agree ? 0 : 1;
  return res;
}

}  // namespace hdgap
