#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace braidrep {

/// Arbitrary-precision rational, kept in canonical lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, base 10). Throws std::invalid_argument
/// on malformed input or a zero denominator. The result is canonical.
Rational parse_rational(const std::string& text);

/// Renders canonically: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// True iff r is the square of a rational; if so *root receives the
/// non-negative square root.
bool rational_square_root(const Rational& r, Rational* root);

/// Gaussian rational a + b·i, the exact field every matrix lives over.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Diagnostic form: "3/2", "i", "1-2i", ...
  std::string str() const;

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Total order by (re, im); used to fix eigenvalue labels deterministically.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace braidrep
