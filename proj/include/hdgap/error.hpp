#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdgap {

/// Category of a library failure. The CLI maps these onto exit statuses.
enum class ErrorKind {
  Dimension,
  Domain,
  InsufficientSamples,
  DegreeBoundExceeded,
  UnsupportedRank,
  Pattern,
  UnsupportedFamily,
  SearchCap,
  OracleAmbiguity,
  Catalog,
  Infeasibility,
  DegenerateSystem,
  Invariant,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InsufficientSamples: return "insufficient-samples";
    case ErrorKind::DegreeBoundExceeded: return "degree-bound-exceeded";
    case ErrorKind::UnsupportedRank: return "unsupported-rank";
    case ErrorKind::Pattern: return "pattern";
    case ErrorKind::UnsupportedFamily: return "unsupported-family";
    case ErrorKind::SearchCap: return "search-cap";
    case ErrorKind::OracleAmbiguity: return "oracle-ambiguity";
    case ErrorKind::Catalog: return "catalog";
    case ErrorKind::Infeasibility: return "infeasibility";
    case ErrorKind::DegenerateSystem: return "degenerate-system";
    case ErrorKind::Invariant: return "invariant";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hdgap
