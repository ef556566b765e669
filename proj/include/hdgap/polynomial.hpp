#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact polynomials in the rank r and family parameter k.
 *
 * Used to recover family-level closed forms from sampled exact values and to
 * certify sign conditions over finite integer ranges.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"

namespace hdgap {

struct Monomial {
  int r_degree = 0;
  int k_degree = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in r and k with rational coefficients. Zero coefficients are
/// never stored.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  ExactPolynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  ExactPolynomial(int c) : ExactPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ExactPolynomial r() { return monomial({1, 0}, 1); }
  static ExactPolynomial k() { return monomial({0, 1}, 1); }

  static ExactPolynomial monomial(Monomial m, const Rational& c) {
    ExactPolynomial p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
  }

  int degree_r() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.r_degree);
    return d;
  }

  int degree_k() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.k_degree);
    return d;
  }

  /// Coefficient of the highest monomial, ordered by r-degree then k-degree.
  Rational leading_coefficient() const { return terms_.empty() ? Rational() : terms_.rbegin()->second; }

  Rational evaluate(const Rational& r, const Rational& k = Rational()) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < m.r_degree; ++i) t *= r;
      for (int i = 0; i < m.k_degree; ++i) t *= k;
      sum += t;
    }
    return sum;
  }

  ExactPolynomial& operator+=(const ExactPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  ExactPolynomial& operator-=(const ExactPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator-(const ExactPolynomial& a) { return ExactPolynomial() - a; }

  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term({ma.r_degree + mb.r_degree, ma.k_degree + mb.k_degree}, ca * cb);
      }
    }
    return out;
  }

  friend ExactPolynomial operator/(const ExactPolynomial& a, const Rational& d) {
    ExactPolynomial out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = c / d;
    return out;
  }

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

  /// Renders with a common denominator, e.g. "(3r^2 - 2r)/4" or "2rk + r".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    mpz_class common = 1;
    for (const auto& [m, c] : terms_) {
      mpz_class den = c.denominator();
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
    }
    std::string body;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const Rational scaled = c * Rational(common, mpz_class(1));
      const Rational mag = abs(scaled);
      if (body.empty()) {
        if (scaled.sign() < 0) body += "-";
      } else {
        body += scaled.sign() < 0 ? " - " : " + ";
      }
      const bool constant = m.r_degree == 0 && m.k_degree == 0;
      if (constant || mag != Rational(1)) body += mag.to_string();
      body += power("r", m.r_degree) + power("k", m.k_degree);
    }
    if (common == 1) return body;
    if (terms_.size() == 1) return body + "/" + common.get_str();
    return "(" + body + ")/" + common.get_str();
  }

 private:
  std::map<Monomial, Rational> terms_;

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::string power(const char* var, int degree) {
    if (degree == 0) return "";
    if (degree == 1) return var;
    return std::string(var) + "^" + std::to_string(degree);
  }
};

/// One exact observation of a family quantity at a parameter point.
/// p(q, k): substitutes the polynomial q for r.
inline ExactPolynomial substitute_r(const ExactPolynomial& p, const ExactPolynomial& q) {
  ExactPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    ExactPolynomial t = ExactPolynomial::monomial({0, m.k_degree}, c);
    for (int i = 0; i < m.r_degree; ++i) t = t * q;
    out += t;
  }
  return out;
}

struct Sample {
  Rational r;
  Rational k;
  Rational value;
};

/// Maximum degree in each variable. k_degree = 0 gives a univariate fit in r.
struct DegreeBound {
  int r_degree = 2;
  int k_degree = 0;
};

namespace detail {

inline std::vector<Monomial> monomials_for(DegreeBound bound) {
  std::vector<Monomial> out;
  for (int a = 0; a <= bound.r_degree; ++a) {
    for (int b = 0; b <= bound.k_degree; ++b) out.push_back({a, b});
  }
  return out;
}

inline Rational power(const Rational& x, int n) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

/// Solves the square system a * x = rhs in place by Gauss-Jordan elimination.
/// Returns nullopt when a is singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = a[col][col].reciprocal();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace detail

/**
 * Interpolates the unique polynomial within @p bound through a unisolvent
 * subset of @p samples, then checks every remaining sample against it.
 *
 * Throws InsufficientSamples when there is no holdout or the points do not
 * determine all monomials, DegreeBoundExceeded when a holdout disagrees, and
 * Domain when two samples share a parameter point.
 */
inline ExactPolynomial fit_polynomial(std::span<const Sample> samples, DegreeBound bound) {
  const auto monomials = detail::monomials_for(bound);
  const std::size_t m = monomials.size();
  if (samples.size() <= m) {
    fail(ErrorKind::InsufficientSamples, std::to_string(samples.size()) + " samples for " + std::to_string(m) +
                                             " monomials leaves no holdout");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].r == samples[j].r && samples[i].k == samples[j].k) {
        fail(ErrorKind::Domain, "duplicate sample point r=" + samples[i].r.to_string() +
                                    " k=" + samples[i].k.to_string());
      }
    }
  }

  auto row_of = [&](const Sample& s) {
    std::vector<Rational> row;
    row.reserve(m);
    for (const auto& mono : monomials) row.push_back(detail::power(s.r, mono.r_degree) * detail::power(s.k, mono.k_degree));
    return row;
  };

  // Greedy selection of independent rows; `echelon` holds reduced copies.
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; s < samples.size() && chosen.size() < m; ++s) {
    auto row = row_of(samples[s]);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = row[pivot_cols[e]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) row[j] -= f * echelon[e][j];
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return !q.is_zero(); });
    if (lead == row.end()) continue;
    const std::size_t col = static_cast<std::size_t>(lead - row.begin());
    const Rational inv = lead->reciprocal();
    for (auto& q : row) q *= inv;
    for (auto& prev : echelon) {
      const Rational f = prev[col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) prev[j] -= f * row[j];
    }
    echelon.push_back(std::move(row));
    pivot_cols.push_back(col);
    chosen.push_back(s);
  }
  if (chosen.size() < m) {
    fail(ErrorKind::InsufficientSamples,
         "sample points determine only " + std::to_string(chosen.size()) + " of " + std::to_string(m) + " monomials");
  }

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (std::size_t s : chosen) {
    a.push_back(row_of(samples[s]));
    rhs.push_back(samples[s].value);
  }
  auto solution = detail::solve_square(std::move(a), std::move(rhs));
  if (!solution) fail(ErrorKind::Invariant, "selected interpolation points are singular");

  ExactPolynomial p;
  for (std::size_t i = 0; i < m; ++i) p += ExactPolynomial::monomial(monomials[i], (*solution)[i]);

  for (const auto& s : samples) {
    if (p.evaluate(s.r, s.k) != s.value) {
      fail(ErrorKind::DegreeBoundExceeded, "holdout r=" + s.r.to_string() + " k=" + s.k.to_string() + " expected " +
                                               s.value.to_string() + " but fit " + p.to_string() + " gives " +
                                               p.evaluate(s.r, s.k).to_string());
    }
  }
  return p;
}

/// Closed integer interval [lo, hi].
struct IntRange {
  long lo = 0;
  long hi = -1;

  bool empty() const { return hi < lo; }
  long size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(long v) const { return v >= lo && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct PositivityCertificate {
  bool positive = false;
  /// First point in (r, k) order where the value is not strictly positive.
  std::optional<std::pair<long, long>> counterexample;
  /// Sign of the leading coefficient (r-degree first), the asymptotic sign.
  int leading_sign = 0;
  long points_checked = 0;
};

/**
 * Exhaustively evaluates @p p at every integer point of the given ranges.
 * When @p k_range is omitted k is fixed at 0.
 */
inline PositivityCertificate prove_positive_on_range(const ExactPolynomial& p, IntRange r_range,
                                                     std::optional<IntRange> k_range = std::nullopt) {
  if (r_range.empty()) fail(ErrorKind::Domain, "empty r range");
  if (k_range && k_range->empty()) fail(ErrorKind::Domain, "empty k range");
  const IntRange ks = k_range.value_or(IntRange{0, 0});

  PositivityCertificate cert;
  cert.leading_sign = p.leading_coefficient().sign();
  cert.positive = true;
  for (long r = r_range.lo; r <= r_range.hi; ++r) {
    for (long k = ks.lo; k <= ks.hi; ++k) {
      ++cert.points_checked;
      if (p.evaluate(r, k).sign() <= 0) {
        cert.positive = false;
        if (!cert.counterexample) cert.counterexample = std::make_pair(r, k);
      }
    }
  }
  return cert;
}

}  // namespace hdgap
