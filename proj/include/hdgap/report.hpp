#pragma once

/**
 * @file report.hpp
 * @brief Report documents and their JSON, CSV and Markdown renderings.
 *
 * Rationals are always written as exact "p/q" strings. Rows are flat objects
 * whose values are strings, integers, booleans, null, or arrays of strings.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hdgap/bounds.hpp"
#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"
#include "hdgap/verify.hpp"
#include "hdgap/weight_vector.hpp"

namespace hdgap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum class Format { Json, Csv, Markdown };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  fail(ErrorKind::Domain, "unknown format '" + std::string(s) + "' (expected json, csv or md)");
}

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  Json status;  // null when the command has no pass/fail outcome
  Json rows = Json::array();
  Json findings = Json::array();
  /// Further named tables, emitted after rows and findings in this order.
  std::vector<std::pair<std::string, Json>> sections;
};

/// Adds `key` as an exact string, plus `key_approx` when decimals are on.
inline void put_rational(Json& row, const std::string& key, const Rational& v, bool decimal) {
  row[key] = v.to_string();
  if (decimal) row[key + "_approx"] = v.to_double();
}

inline Json vector_json(const WeightVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(c.to_string());
  return out;
}

inline Json optional_int(const std::optional<int>& k) { return k ? Json(*k) : Json(nullptr); }

inline Json bound_row(const BoundReport& rep, bool decimal, bool with_direct = true) {
  Json row = Json::object();
  row["group"] = rep.group.display_name;
  row["family"] = std::string(to_string(rep.group.family));
  row["type"] = rep.group.rtype.name();
  row["r"] = rep.group.rank;
  row["k"] = optional_int(rep.group.k);
  row["n"] = rep.n;
  row["two_rho"] = vector_json(rep.two_rho);
  row["theta"] = vector_json(rep.theta);
  row["w"] = vector_json(rep.w);
  put_rational(row, "theta_pairing", rep.theta_pairing, decimal);
  put_rational(row, "ell", rep.ell, decimal);
  row["k_direct"] = with_direct ? Json(rep.k_direct) : Json(nullptr);
  put_rational(row, "k_closed", rep.k_closed, decimal);
  put_rational(row, "c", rep.c, decimal);
  put_rational(row, "margin", rep.margin, decimal);
  put_rational(row, "hd_strict_upper", rep.hd_strict_upper, decimal);
  row["sharpness_reference"] = rep.sharpness_reference;
  row["passes"] = rep.passes;
  return row;
}

inline Json finding_row(const Finding& f) {
  Json row = Json::object();
  row["location"] = f.location;
  row["paper_value"] = f.paper_value;
  row["computed_value"] = f.computed_value;
  row["kind"] = f.kind;
  row["documented"] = f.documented;
  return row;
}

inline Json to_json(const ReportDocument& doc) {
  Json out = Json::object();
  out["schema_version"] = doc.schema_version;
  out["command"] = doc.command;
  if (!doc.status.is_null()) out["status"] = doc.status;
  out["rows"] = doc.rows;
  out["findings"] = doc.findings;
  for (const auto& [name, table] : doc.sections) out[name] = table;
  return out;
}

namespace detail {

inline std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += cell_text(v[i]);
    }
    return s + ")";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

/// Column order: first appearance across all rows.
inline std::vector<std::string> columns_of(const Json& table) {
  std::vector<std::string> cols;
  for (const auto& row : table) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    }
  }
  return cols;
}

inline void write_csv_table(std::ostream& os, const Json& table) {
  const auto cols = columns_of(table);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
  os << '\n';
  for (const auto& row : table) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(cols[i])) os << csv_escape(cell_text(row[cols[i]]));
    }
    os << '\n';
  }
}

inline void write_md_table(std::ostream& os, const Json& table) {
  const auto cols = columns_of(table);
  if (cols.empty()) {
    os << "_none_\n";
    return;
  }
  os << '|';
  for (const auto& c : cols) os << ' ' << md_escape(c) << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
  os << '\n';
  for (const auto& row : table) {
    os << '|';
    for (const auto& c : cols) os << ' ' << (row.contains(c) ? md_escape(cell_text(row[c])) : "") << " |";
    os << '\n';
  }
}

}  // namespace detail

inline std::string render(const ReportDocument& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: os << to_json(doc).dump(2) << '\n'; break;
    case Format::Csv: {
      detail::write_csv_table(os, doc.rows);
      if (!doc.findings.empty()) {
        os << "\n# findings\n";
        detail::write_csv_table(os, doc.findings);
      }
      for (const auto& [name, table] : doc.sections) {
        os << "\n# " << name << '\n';
        detail::write_csv_table(os, table);
      }
      break;
    }
    case Format::Markdown: {
      os << "# " << doc.command << "\n\n";
      os << "schema_version: " << doc.schema_version << "\n\n";
      if (!doc.status.is_null()) {
        for (auto it = doc.status.begin(); it != doc.status.end(); ++it) {
          os << "- " << it.key() << ": " << detail::cell_text(it.value()) << '\n';
        }
        os << '\n';
      }
      os << "## rows\n\n";
      detail::write_md_table(os, doc.rows);
      os << "\n## findings\n\n";
      detail::write_md_table(os, doc.findings);
      for (const auto& [name, table] : doc.sections) {
        os << "\n## " << name << "\n\n";
        detail::write_md_table(os, table);
      }
      break;
    }
  }
  return os.str();
}

/// Parses a JSON rendering back into a document.
inline ReportDocument parse_json_report(const std::string& text) {
  const Json j = Json::parse(text);
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "schema_version" || key == "command") continue;
    if (key == "status") doc.status = it.value();
    else if (key == "rows") doc.rows = it.value();
    else if (key == "findings") doc.findings = it.value();
    else doc.sections.emplace_back(key, it.value());
  }
  return doc;
}

}  // namespace hdgap
