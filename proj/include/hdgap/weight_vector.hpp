#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hdgap/error.hpp"
#include "hdgap/rational.hpp"

namespace hdgap {

/// A vector in the orthonormal basis e_1, ..., e_d with exact coordinates.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t dim) : coords_(dim) {}
  explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  WeightVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static WeightVector zero(std::size_t dim) { return WeightVector(dim); }

  static WeightVector unit(std::size_t dim, std::size_t i, Rational scale = 1) {
    WeightVector v(dim);
    v.coords_.at(i) = std::move(scale);
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  WeightVector& operator+=(const WeightVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }

  WeightVector& operator-=(const WeightVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }

  WeightVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(WeightVector a, const Rational& s) { return a *= s; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend WeightVector operator-(WeightVector a) { return a *= Rational(-1); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  /// Lexicographic on coordinates, starting from e_1.
  friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// e-basis expression, e.g. "5e1 + 3e2 + e3" or "1/2e1 - 1/2e3".
  std::string to_expression() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Rational& c = coords_[i];
      if (c.is_zero()) continue;
      const Rational mag = abs(c);
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (mag != Rational(1)) out += mag.to_string();
      out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Rational> coords_;

  void require_same_size(const WeightVector& o) const {
    if (o.size() != size()) {
      fail(ErrorKind::Dimension, "weight vectors of length " + std::to_string(size()) + " and " +
                                     std::to_string(o.size()) + " are incompatible");
    }
  }
};

/// Euclidean pairing in the e-basis.
inline Rational pairing(const WeightVector& u, const WeightVector& v) {
  if (u.size() != v.size()) {
    fail(ErrorKind::Dimension, "pairing of vectors with lengths " + std::to_string(u.size()) + " and " +
                                   std::to_string(v.size()));
  }
  Rational sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    sum += u[i] * v[i];
  }
  return sum;
}

inline Rational norm2(const WeightVector& v) { return pairing(v, v); }

}  // namespace hdgap
