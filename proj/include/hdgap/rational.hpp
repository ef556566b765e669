#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Values are always in lowest terms with a positive denominator. Numerator
 * and denominator are arbitrary precision; values whose numerator and
 * denominator both fit in a signed 64-bit word are kept inline and combined
 * with 128-bit intermediates, everything else is carried by GMP. The
 * representation is canonical: a value that fits inline is never stored in
 * GMP form, so equality on the representation is equality of values.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "hdgap/error.hpp"

namespace hdgap {

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<std::int64_t>(value) != kMin) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    } else {
      if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(kMax)) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
    }
    *this = from_mpq(mpq_class(mpz_class(std::to_string(value))));
  }

  template <std::integral N, std::integral D>
  Rational(N numerator, D denominator)
      : Rational(Rational(numerator) / Rational(denominator)) {}

  explicit Rational(const mpq_class& value) : Rational(from_mpq(value)) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) fail(ErrorKind::Domain, "rational with zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    *this = from_mpq(q);
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(mpz_class(std::string(text)), mpz_class(1));
      }
      return Rational(mpz_class(std::string(text.substr(0, slash))),
                      mpz_class(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::Domain, "malformed rational '" + std::string(text) + "'");
    }
  }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
    mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
    return q;
  }

  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not above the value.
  mpz_class floor() const {
    mpz_class out;
    const mpq_class q = to_mpq();
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
  }

  /// Smallest integer not below the value.
  mpz_class ceil() const {
    mpz_class out;
    const mpq_class q = to_mpq();
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (!big_) {
      return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
  }

  Rational operator-() const {
    if (!big_) {
      Rational out;
      out.num_ = -num_;
      out.den_ = den_;
      return out;
    }
    return from_mpq(-*big_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return reduce(Wide(a.num_) + b.num_, a.den_);
      return reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return reduce(Wide(a.num_) - b.num_, a.den_);
      return reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      // Cross-cancel first so the product is already in lowest terms.
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      return from_wide(Wide(a.num_ / g1) * (b.num_ / g2), Wide(a.den_ / g2) * (b.den_ / g1));
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "division by zero");
    return a * b.reciprocal();
  }

  Rational reciprocal() const {
    if (is_zero()) fail(ErrorKind::Domain, "reciprocal of zero");
    if (!big_) {
      Rational out;
      out.num_ = num_ < 0 ? -den_ : den_;
      out.den_ = num_ < 0 ? -num_ : num_;
      return out;
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), big_->get_mpq_t());
    return from_mpq(inv);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical split: a value that fits inline is never big
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const Wide lhs = Wide(a.num_) * b.den_;
      const Wide rhs = Wide(b.num_) * a.den_;
      return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  using Wide = __int128;
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  static mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return z;
  }

  static mpz_class wide_to_mpz(Wide v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi;
    mpz_class lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class z = (hi << 64) + lo;
    return negative ? mpz_class(-z) : z;
  }

  static Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

  static Wide gcd_wide(Wide a, Wide b) {
    a = abs_wide(a);
    b = abs_wide(b);
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool fits(Wide v) { return v <= kMax && v > kMin; }

  /// Builds from an already reduced pair with positive denominator.
  static Rational from_wide(Wide num, Wide den) {
    if (fits(num) && fits(den)) {
      Rational out;
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
      return out;
    }
    mpq_class q(wide_to_mpz(num), wide_to_mpz(den));
    Rational out;
    out.big_ = std::make_shared<const mpq_class>(std::move(q));
    return out;
  }

  static Rational reduce(Wide num, Wide den) {
    if (num == 0) return Rational();
    const Wide g = gcd_wide(num, den);
    return from_wide(num / g, den / g);
  }

  static Rational from_mpq(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != to_mpz(kMin)) {
      Rational out;
      out.num_ = q.get_num().get_si();
      out.den_ = q.get_den().get_si();
      return out;
    }
    Rational out;
    out.big_ = std::make_shared<const mpq_class>(q);
    return out;
  }
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace hdgap
