#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace bcforge {

/// Exact element of the Gaussian rationals Q(i), stored as re + im*i.
///
/// Both components are GMP rationals kept in canonical form (coprime
/// numerator/denominator, positive denominator), so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  /// Parses "a", "a/b", "a+bi", "a/b-c/di", "i", "-i", "3i".
  static Scalar parse(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (lexicographic on (re, im)); used only for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bcforge

template <>
struct std::hash<bcforge::Scalar> {
  std::size_t operator()(const bcforge::Scalar& s) const { return s.hash(); }
};
