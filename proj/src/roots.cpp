#include "galois/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace galois {

namespace {

using cd = std::complex<double>;

Dyadic dyadic_from_double(double v) {
  if (v == 0.0) return {};
  int e = 0;
  double frac = std::frexp(v, &e);
  auto m = static_cast<long long>(std::ldexp(frac, 53));
  Integer mi;
  mpz_set_si(mi.get_mpz_t(), static_cast<long>(m));
  return {mi, static_cast<long>(e) - 53};
}

long magnitude_top(const ComplexBall& z) {
  long t = LONG_MIN / 4;
  if (!z.re().is_zero()) t = std::max(t, z.re().top());
  if (!z.im().is_zero()) t = std::max(t, z.im().top());
  return t;
}

std::vector<cd> double_aberth(const UniPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<double> c(n + 1);
  double bound = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = f.coeff(k).get_d();
    if (k < n) bound = std::max(bound, std::abs(c[k]));
  }
  bound += 1;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(bound, angle);
  }
  auto eval = [&](cd x, cd& df) {
    cd p = 0;
    df = 0;
    for (std::size_t k = n + 1; k-- > 0;) {
      df = df * x + p;
      p = p * x + c[k];
    }
    return p;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cd df;
      cd p = eval(z[k], df);
      if (p == cd(0)) continue;
      cd ratio = p / df;
      cd s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) s += 1.0 / (z[k] - z[j]);
      }
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

// One Aberth sweep at working precision; returns false once converged.
bool aberth_sweep(const UniPoly& f, const UniPoly& df, std::vector<ComplexBall>& z, long prec) {
  const std::size_t n = z.size();
  bool moving = false;
  for (std::size_t k = 0; k < n; ++k) {
    try {
      ComplexBall p = f.eval(z[k], prec).midpoint();
      if (p.re().is_zero() && p.im().is_zero()) continue;
      ComplexBall dp = df.eval(z[k], prec).midpoint();
      ComplexBall ratio = div(p, dp, prec).midpoint();
      ComplexBall s = ComplexBall::exact(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        s = add(s, inv(sub(z[k], z[j], prec).midpoint(), prec), prec).midpoint();
      }
      ComplexBall denom = sub(ComplexBall::exact(1), mul(ratio, s, prec), prec).midpoint();
      ComplexBall w = div(ratio, denom, prec).midpoint();
      z[k] = sub(z[k], w, prec).midpoint();
      long scale = std::max(0L, magnitude_top(z[k]));
      if (magnitude_top(w) > scale - prec + 4) moving = true;
    } catch (const CertificationError&) {
      // a vanishing denominator; leave this approximation for the next sweep
      moving = true;
    }
  }
  return moving;
}

bool key_less(const ComplexBall& a, const ComplexBall& b) {
  bool ra = a.im().is_zero(), rb = b.im().is_zero();
  if (ra != rb) return ra;
  if (ra) return a.re() < b.re();
  Dyadic ka = round_to(a.re(), -32), kb = round_to(b.re(), -32);
  if (!(ka == kb)) return ka < kb;
  return a.im() < b.im();
}

struct Attempt {
  bool certified = false;
  std::vector<ComplexBall> balls;
  Dyadic max_radius;
};

Attempt certify(const UniPoly& f, const std::vector<ComplexBall>& centers, long prec) {
  Attempt at;
  for (const auto& z : centers) {
    Dyadic r = certification_radius(f, z, prec);
    at.balls.push_back(z.with_radius(r));
    if (at.max_radius < r) at.max_radius = r;
  }
  for (std::size_t i = 0; i < at.balls.size(); ++i) {
    const auto& b = at.balls[i];
    if (!b.im().is_zero() && b.meets_real_axis()) return at;
    for (std::size_t j = i + 1; j < at.balls.size(); ++j) {
      if (!ball_disjoint(b, at.balls[j])) return at;
    }
  }
  at.certified = true;
  return at;
}

RootSystem run_isolation(const UniPoly& f, std::vector<ComplexBall> z, long precision_bits, long start_prec) {
  const auto n = static_cast<long>(f.degree());
  const UniPoly df = f.derivative();
  const long cap = 32 * n * (precision_bits + 64) + 4096;
  const Dyadic target(Integer(1), -precision_bits);
  Attempt last;
  for (long prec = start_prec; prec <= cap; prec *= 2) {
    for (int sweep = 0; sweep < 60; ++sweep) {
      if (!aberth_sweep(f, df, z, prec)) break;
    }
    for (auto& zk : z) {
      long scale = std::max(0L, magnitude_top(zk));
      if (!zk.im().is_zero() && zk.im().top() < scale - prec / 2) zk = ComplexBall::exact(zk.re());
    }
    last = certify(f, z, prec);
    if (last.certified && last.max_radius <= target) {
      RootSystem rs;
      rs.poly = f;
      rs.enclosures = std::move(last.balls);
      rs.precision_bits = precision_bits;
      rs.working_bits = prec;
      return rs;
    }
  }
  std::ostringstream os;
  os << "root isolation of " << f.to_string() << " not certified within " << cap
     << " working bits; largest radius reached " << last.max_radius.to_double();
  throw CertificationError(os.str());
}

}  // namespace

Dyadic certification_radius(const UniPoly& f, const ComplexBall& z, long prec) {
  ComplexBall value = f.eval(z.midpoint(), prec);
  return round_up(root_upper(abs_upper(value), static_cast<unsigned>(f.degree())));
}

RootSystem isolate_roots(const UniPoly& f, long precision_bits) {
  if (f.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  if (!f.is_monic()) throw DomainError("root isolation needs a monic polynomial");
  UniPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) throw DomainError("polynomial is not squarefree: gcd(f, f') = " + g.to_string());
  std::vector<ComplexBall> z;
  for (const cd& v : double_aberth(f)) {
    z.push_back(ComplexBall::exact(dyadic_from_double(v.real()), dyadic_from_double(v.imag())));
  }
  RootSystem rs = run_isolation(f, std::move(z), precision_bits, 64);
  std::sort(rs.enclosures.begin(), rs.enclosures.end(), key_less);
  return rs;
}

RootSystem refine(const RootSystem& rs, long precision_bits) {
  if (precision_bits <= rs.precision_bits) return rs;
  std::vector<ComplexBall> z;
  for (const auto& b : rs.enclosures) z.push_back(b.midpoint());
  RootSystem fine = run_isolation(rs.poly, std::move(z), precision_bits, std::max(64L, rs.working_bits));
  // keep indices: each new ball must meet exactly its own old ball
  std::vector<ComplexBall> ordered(rs.size());
  std::vector<char> used(rs.size(), 0);
  for (const auto& nb : fine.enclosures) {
    std::size_t hit = rs.size();
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (!ball_disjoint(nb, rs.enclosures[j])) {
        if (hit != rs.size()) throw CertificationError("refined enclosure meets two coarse enclosures");
        hit = j;
      }
    }
    if (hit == rs.size() || used[hit]) throw CertificationError("refined enclosures do not match coarse ones");
    used[hit] = 1;
    ordered[hit] = nb;
  }
  fine.enclosures = std::move(ordered);
  return fine;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

Reconstruction classify_rational(const ComplexBall& x, const Integer& denominator_bound) {
  if (denominator_bound < 1) throw DomainError("denominator bound must be at least 1");
  Reconstruction out;
  if (!x.meets_real_axis()) return out;
  Rational center = x.re().to_rational();
  Rational rad = x.radius().to_rational();
  Rational s = simplest_rational_between(center - rad, center + rad);
  const Integer& q = s.get_den();
  if (q > denominator_bound) return out;
  if (2 * rad * q * denominator_bound < 1) {
    // s is the only candidate in the real shadow of the ball
    if (x.contains(s)) {
      out.status = Reconstruction::Status::Found;
      out.value = s;
    }
  } else {
    out.status = Reconstruction::Status::Ambiguous;
  }
  return out;
}

std::optional<Rational> reconstruct_rational(const ComplexBall& x, const Integer& denominator_bound) {
  Reconstruction r = classify_rational(x, denominator_bound);
  if (r.status == Reconstruction::Status::Found) return r.value;
  return std::nullopt;
}

}  // namespace galois
