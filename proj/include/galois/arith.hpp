#pragma once

// Exact rationals and certified complex ball arithmetic.
//
// Rational is GMP's mpq_class; every value produced by its operators is
// canonical (positive denominator, coprime parts). ComplexBall is a disk
// with a dyadic center and a dyadic radius; every operation takes the
// working precision explicitly and rounds outward, so the result disk
// contains every exact result of operands drawn from the operand disks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "galois/error.hpp"

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);
/// Parses "p" or "p/q"; throws DomainError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

/// Exact dyadic number mantissa * 2^exponent.
struct Dyadic {
  Integer mantissa = 0;
  long exponent = 0;

  Dyadic() = default;
  Dyadic(Integer m, long e);
  static Dyadic from_int(long v) { return Dyadic(Integer(v), 0); }

  bool is_zero() const { return mantissa == 0; }
  int sign() const { return sgn(mantissa); }
  /// Smallest t with |value| < 2^t; meaningless for zero.
  long top() const;
  Rational to_rational() const;
  double to_double() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
};

Dyadic abs(const Dyadic& a);
Dyadic mul_pow2(const Dyadic& a, long k);

/// Round to a multiple of 2^ulp_exponent (nearest). The rounding error is at
/// most 2^(ulp_exponent - 1).
Dyadic round_to(const Dyadic& a, long ulp_exponent);
/// Smallest dyadic >= q with at most `bits` mantissa bits.
Dyadic ceil_dyadic(const Rational& q, int bits = 32);
/// Largest dyadic <= q with at most `bits` mantissa bits.
Dyadic floor_dyadic(const Rational& q, int bits = 32);
/// Round a nonnegative dyadic up to at most `bits` mantissa bits.
Dyadic round_up(const Dyadic& a, int bits = 32);
/// Upper and lower bounds on sqrt(re^2 + im^2), both with ~bits precision.
Dyadic hypot_upper(const Dyadic& re, const Dyadic& im, int bits = 40);
Dyadic hypot_lower(const Dyadic& re, const Dyadic& im, int bits = 40);
/// Upper bound on a^(1/n) for a >= 0.
Dyadic root_upper(const Dyadic& a, unsigned n, int bits = 40);

class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(Dyadic re, Dyadic im, Dyadic radius);

  static ComplexBall exact(long v) { return {Dyadic::from_int(v), Dyadic{}, Dyadic{}}; }
  static ComplexBall exact(const Dyadic& re, const Dyadic& im = {}) { return {re, im, Dyadic{}}; }
  /// Enclosure of re + i*im rounded to `prec` bits.
  static ComplexBall from_rational(const Rational& re, const Rational& im, long prec);
  static ComplexBall from_rational(const Rational& re, long prec) {
    return from_rational(re, Rational(0), prec);
  }

  const Dyadic& re() const { return re_; }
  const Dyadic& im() const { return im_; }
  const Dyadic& radius() const { return rad_; }

  ComplexBall with_radius(const Dyadic& r) const { return {re_, im_, r}; }
  ComplexBall midpoint() const { return {re_, im_, Dyadic{}}; }
  ComplexBall conj() const { return {re_, -im_, rad_}; }

  bool contains(const Rational& re, const Rational& im = Rational(0)) const;
  /// True only if every point of `inner` lies in this ball.
  bool contains(const ComplexBall& inner) const;
  bool contains_zero() const { return contains(Rational(0), Rational(0)); }
  /// True if the imaginary part interval contains zero.
  bool meets_real_axis() const;

  std::string to_string(int digits = 12) const;

 private:
  Dyadic re_, im_, rad_;
};

/// Distance between centers strictly exceeds the sum of radii.
bool ball_disjoint(const ComplexBall& a, const ComplexBall& b);
bool balls_overlap(const ComplexBall& a, const ComplexBall& b);

ComplexBall add(const ComplexBall& a, const ComplexBall& b, long prec);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b, long prec);
ComplexBall neg(const ComplexBall& a);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, long prec);
ComplexBall mul(const ComplexBall& a, const Integer& k, long prec);
/// Throws CertificationError if `b` may contain zero.
ComplexBall inv(const ComplexBall& b, long prec);
ComplexBall div(const ComplexBall& a, const ComplexBall& b, long prec);
ComplexBall mul_rational(const ComplexBall& a, const Rational& q, long prec);
/// Upper bound on |z| for every z in the ball.
Dyadic abs_upper(const ComplexBall& a);

}  // namespace galois
