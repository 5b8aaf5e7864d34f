#include "galois/arith.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace galois {
namespace {

long bitlen(const Integer& v) {
  return v == 0 ? 0 : static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Integer shl(const Integer& v, long k) {
  Integer r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

Integer pow2(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

// Rounds the center to `prec` significant bits relative to its largest
// component and returns the rounding error bound to add to the radius.
Dyadic round_center(Dyadic& re, Dyadic& im, long prec) {
  long t;
  if (re.is_zero() && im.is_zero()) return {};
  if (re.is_zero()) {
    t = im.top();
  } else if (im.is_zero()) {
    t = re.top();
  } else {
    t = std::max(re.top(), im.top());
  }
  long u = t - prec;
  bool rounded = false;
  if (!re.is_zero() && re.exponent < u) {
    re = round_to(re, u);
    rounded = true;
  }
  if (!im.is_zero() && im.exponent < u) {
    im = round_to(im, u);
    rounded = true;
  }
  // each component is off by at most 2^(u-1); the disk radius 2^u covers both
  return rounded ? Dyadic(Integer(1), u) : Dyadic{};
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("malformed rational: '" + text + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Dyadic::Dyadic(Integer m, long e) : mantissa(std::move(m)), exponent(e) {}

long Dyadic::top() const { return bitlen(mantissa) + exponent; }

Rational Dyadic::to_rational() const {
  if (exponent >= 0) return Rational(shl(mantissa, exponent));
  return make_rational(mantissa, pow2(-exponent));
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long e = 0;
  double d = mpz_get_d_2exp(&e, mantissa.get_mpz_t());
  return std::ldexp(d, static_cast<int>(std::clamp<long>(e + exponent, -100000, 100000)));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent == b.exponent) return {a.mantissa + b.mantissa, a.exponent};
  if (a.exponent < b.exponent) return {a.mantissa + shl(b.mantissa, b.exponent - a.exponent), a.exponent};
  return {shl(a.mantissa, a.exponent - b.exponent) + b.mantissa, b.exponent};
}

Dyadic operator-(const Dyadic& a) { return {-a.mantissa, a.exponent}; }
Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.mantissa * b.mantissa, a.exponent + b.exponent};
}

int cmp(const Dyadic& a, const Dyadic& b) { return (a - b).sign(); }

Dyadic abs(const Dyadic& a) { return {abs(a.mantissa), a.exponent}; }

Dyadic mul_pow2(const Dyadic& a, long k) { return {a.mantissa, a.exponent + k}; }

Dyadic round_to(const Dyadic& a, long ulp_exponent) {
  if (a.is_zero() || a.exponent >= ulp_exponent) return a;
  long shift = ulp_exponent - a.exponent;
  Integer half = pow2(shift - 1);
  Integer m;
  Integer t = a.mantissa + half;
  mpz_fdiv_q_2exp(m.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return {m, ulp_exponent};
}

namespace {

Dyadic rational_to_dyadic(const Rational& q, int bits, bool ceiling) {
  if (q == 0) return {};
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  long e = (bitlen(num) - bitlen(den)) - bits - 1;
  Integer n = num, d = den;
  if (e < 0) {
    n = shl(n, -e);
  } else {
    d = shl(d, e);
  }
  Integer m;
  if (ceiling) {
    mpz_cdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_fdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  }
  return {m, e};
}

}  // namespace

Dyadic ceil_dyadic(const Rational& q, int bits) { return rational_to_dyadic(q, bits, true); }
Dyadic floor_dyadic(const Rational& q, int bits) { return rational_to_dyadic(q, bits, false); }

Dyadic round_up(const Dyadic& a, int bits) {
  long len = bitlen(a.mantissa);
  if (len <= bits) return a;
  long shift = len - bits;
  Integer m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), a.mantissa.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return {m, a.exponent + shift};
}

namespace {

Dyadic sqrt_bound(const Dyadic& s, int bits, bool upper) {
  if (s.is_zero()) return {};
  long k = std::max<long>(0, 2L * bits - bitlen(s.mantissa));
  if ((s.exponent - k) & 1) ++k;
  Integer scaled = shl(s.mantissa, k);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  if (upper && r * r < scaled) r += 1;
  return {r, (s.exponent - k) / 2};
}

}  // namespace

Dyadic hypot_upper(const Dyadic& re, const Dyadic& im, int bits) {
  return sqrt_bound(re * re + im * im, bits, true);
}

Dyadic hypot_lower(const Dyadic& re, const Dyadic& im, int bits) {
  return sqrt_bound(re * re + im * im, bits, false);
}

Dyadic root_upper(const Dyadic& a, unsigned n, int bits) {
  if (a.sign() < 0) throw DomainError("root_upper of a negative number");
  if (a.is_zero()) return {};
  if (n == 1) return a;
  long nn = static_cast<long>(n);
  long k = std::max<long>(0, nn * bits - bitlen(a.mantissa));
  long rem = ((a.exponent - k) % nn + nn) % nn;
  k += rem;
  Integer scaled = shl(a.mantissa, k);
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
  if (!exact) r += 1;
  return {r, (a.exponent - k) / nn};
}

ComplexBall::ComplexBall(Dyadic re, Dyadic im, Dyadic radius)
    : re_(std::move(re)), im_(std::move(im)), rad_(std::move(radius)) {
  if (rad_.sign() < 0) throw DomainError("negative ball radius");
}

ComplexBall ComplexBall::from_rational(const Rational& re, const Rational& im, long prec) {
  auto top_of = [](const Rational& q) { return bitlen(q.get_num()) - bitlen(q.get_den()) + 1; };
  long t = std::max(re == 0 ? LONG_MIN / 2 : top_of(re), im == 0 ? LONG_MIN / 2 : top_of(im));
  if (re == 0 && im == 0) return exact(0);
  long u = t - prec;
  bool inexact = false;
  auto round_component = [&](const Rational& q) -> Dyadic {
    if (q == 0) return {};
    // nearest multiple of 2^u
    Integer n = q.get_num(), d = q.get_den();
    if (u < 0) {
      n = shl(n, -u);
    } else {
      d = shl(d, u);
    }
    Integer twice = 2 * n + d;
    Integer m, r;
    Integer two_d = 2 * d;
    mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), twice.get_mpz_t(), two_d.get_mpz_t());
    if (m * d != n) inexact = true;
    return {m, u};
  };
  Dyadic dre = round_component(re);
  Dyadic dim = round_component(im);
  return {dre, dim, inexact ? Dyadic(Integer(1), u) : Dyadic{}};
}

bool ComplexBall::contains(const Rational& re, const Rational& im) const {
  Rational dx = re - re_.to_rational();
  Rational dy = im - im_.to_rational();
  Rational r = rad_.to_rational();
  return dx * dx + dy * dy <= r * r;
}

bool ComplexBall::contains(const ComplexBall& inner) const {
  Dyadic d = hypot_upper(re_ - inner.re_, im_ - inner.im_);
  return d + inner.rad_ <= rad_;
}

bool ComplexBall::meets_real_axis() const { return abs(im_) <= rad_; }

std::string ComplexBall::to_string(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << re_.to_double();
  double im = im_.to_double();
  if (im >= 0) os << '+';
  os << im << "i +/- ";
  os.precision(3);
  os << rad_.to_double();
  return os.str();
}

bool ball_disjoint(const ComplexBall& a, const ComplexBall& b) {
  Dyadic dx = a.re() - b.re();
  Dyadic dy = a.im() - b.im();
  Dyadic r = a.radius() + b.radius();
  return r * r < dx * dx + dy * dy;
}

bool balls_overlap(const ComplexBall& a, const ComplexBall& b) { return !ball_disjoint(a, b); }

ComplexBall add(const ComplexBall& a, const ComplexBall& b, long prec) {
  Dyadic re = a.re() + b.re();
  Dyadic im = a.im() + b.im();
  Dyadic err = round_center(re, im, prec);
  return {re, im, round_up(a.radius() + b.radius() + err)};
}

ComplexBall neg(const ComplexBall& a) { return {-a.re(), -a.im(), a.radius()}; }

ComplexBall sub(const ComplexBall& a, const ComplexBall& b, long prec) { return add(a, neg(b), prec); }

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, long prec) {
  Dyadic re = a.re() * b.re() - a.im() * b.im();
  Dyadic im = a.re() * b.im() + a.im() * b.re();
  Dyadic rad;
  if (!a.radius().is_zero() || !b.radius().is_zero()) {
    Dyadic na = hypot_upper(a.re(), a.im());
    Dyadic nb = hypot_upper(b.re(), b.im());
    rad = round_up(na * b.radius() + nb * a.radius() + a.radius() * b.radius());
  }
  Dyadic err = round_center(re, im, prec);
  return {re, im, round_up(rad + err)};
}

ComplexBall mul(const ComplexBall& a, const Integer& k, long prec) {
  Dyadic dk(k, 0);
  Dyadic re = a.re() * dk;
  Dyadic im = a.im() * dk;
  Dyadic rad = round_up(a.radius() * Dyadic(abs(k), 0));
  Dyadic err = round_center(re, im, prec);
  return {re, im, round_up(rad + err)};
}

ComplexBall inv(const ComplexBall& b, long prec) {
  Dyadic lower = hypot_lower(b.re(), b.im());
  if (lower <= b.radius()) throw CertificationError("inverse of a ball that may contain zero");
  long e = std::min(b.re().is_zero() ? b.im().exponent : b.re().exponent,
                    b.im().is_zero() ? b.re().exponent : b.im().exponent);
  Integer x = shl(b.re().mantissa, b.re().exponent - e);
  Integer y = shl(b.im().mantissa, b.im().exponent - e);
  Integer n = x * x + y * y;
  long k = prec + 4 + bitlen(n) - std::max(bitlen(x), bitlen(y));
  Integer nx = x, ny = -y, den = n;
  if (k >= 0) {
    nx = shl(nx, k);
    ny = shl(ny, k);
  } else {
    den = shl(den, -k);
  }
  Integer qx, qy;
  mpz_tdiv_q(qx.get_mpz_t(), nx.get_mpz_t(), den.get_mpz_t());
  mpz_tdiv_q(qy.get_mpz_t(), ny.get_mpz_t(), den.get_mpz_t());
  // truncation error < 2^(-k-e) per component
  Dyadic trunc(Integer(2), -k - e);
  Dyadic rad = trunc;
  if (!b.radius().is_zero()) {
    Rational r = b.radius().to_rational();
    Rational l = lower.to_rational();
    rad = rad + ceil_dyadic(r / (l * (l - r)));
  }
  Dyadic re(qx, -k - e), im(qy, -k - e);
  Dyadic err = round_center(re, im, prec);
  return {re, im, round_up(rad + err)};
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b, long prec) { return mul(a, inv(b, prec), prec); }

ComplexBall mul_rational(const ComplexBall& a, const Rational& q, long prec) {
  if (q.get_den() == 1) return mul(a, q.get_num(), prec);
  return mul(a, ComplexBall::from_rational(q, prec + 8), prec);
}

Dyadic abs_upper(const ComplexBall& a) { return round_up(hypot_upper(a.re(), a.im()) + a.radius()); }

}  // namespace galois
