#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/arith.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 100000);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

ComplexBall ball_of(const Rational& re, const Rational& rad) {
  ComplexBall c = ComplexBall::from_rational(re, 80);
  return c.with_radius(ceil_dyadic(rad + c.radius().to_rational()));
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational q = make_rational(Integer(6), Integer(-4));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(Integer(5), Integer(2)));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    if (a != 0) {
      Rational one = a * (1 / a);
      CHECK(one == 1);
    }
    Rational s = a + b;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(s.get_den() > 0);
  }
}

TEST_CASE("dyadic helpers") {
  Dyadic a(Integer(3), -1);  // 1.5
  Dyadic b(Integer(5), 2);   // 20
  CHECK((a + b).to_rational() == make_rational(Integer(43), Integer(2)));
  CHECK((a * b).to_rational() == 30);
  CHECK(cmp(a, b) < 0);
  Dyadic r = root_upper(Dyadic::from_int(8), 3);
  CHECK(r.to_rational() >= 2);
  CHECK(r.to_rational() < Rational(2) + make_rational(Integer(1), Integer(1000000)));
  Dyadic h = hypot_upper(Dyadic::from_int(3), Dyadic::from_int(4));
  CHECK(h.to_rational() >= 5);
  CHECK(hypot_lower(Dyadic::from_int(3), Dyadic::from_int(4)).to_rational() <= 5);
  Rational third = make_rational(Integer(1), Integer(3));
  CHECK(ceil_dyadic(third).to_rational() >= third);
  CHECK(floor_dyadic(third).to_rational() <= third);
}

TEST_CASE("ball_disjoint examples") {
  Rational tenth = make_rational(Integer(1), Integer(10));
  CHECK(ball_disjoint(ball_of(0, tenth), ball_of(1, tenth)));
  Rational six_tenths = make_rational(Integer(6), Integer(10));
  CHECK_FALSE(ball_disjoint(ball_of(0, six_tenths), ball_of(1, six_tenths)));

  // enclosures of +-sqrt(2) from interval Newton, radius below 1e-20
  auto [lo, hi] = oracle::newton_sqrt2_enclosure(make_rational(Integer(1), Integer("100000000000000000000")));
  Rational mid = (lo + hi) / 2;
  Rational rad = (hi - lo) / 2;
  CHECK(rad < make_rational(Integer(1), Integer("100000000000000000000")));
  ComplexBall pos = ball_of(mid, rad);
  ComplexBall negb = ball_of(-mid, rad);
  CHECK(ball_disjoint(pos, negb));
  CHECK(ball_disjoint(negb, pos));
}

TEST_CASE("ball operations contain the exact result") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational xr = random_rational(rng), xi = random_rational(rng);
    Rational yr = random_rational(rng), yi = random_rational(rng);
    long prec = 30 + (i % 5) * 20;
    ComplexBall x = ComplexBall::from_rational(xr, xi, prec);
    ComplexBall y = ComplexBall::from_rational(yr, yi, prec);
    CHECK(x.contains(xr, xi));

    ComplexBall s = add(x, y, prec);
    CHECK(s.contains(Rational(xr + yr), Rational(xi + yi)));
    ComplexBall d = sub(x, y, prec);
    CHECK(d.contains(Rational(xr - yr), Rational(xi - yi)));
    ComplexBall p = mul(x, y, prec);
    CHECK(p.contains(Rational(xr * yr - xi * yi), Rational(xr * yi + xi * yr)));
    if (yr != 0 || yi != 0) {
      Rational n = yr * yr + yi * yi;
      ComplexBall q = inv(y, prec);
      CHECK(q.contains(Rational(yr / n), Rational(-yi / n)));
      ComplexBall qq = div(x, y, prec);
      Rational re = (xr * yr + xi * yi) / n, im = (xi * yr - xr * yi) / n;
      CHECK(qq.contains(re, im));
    }
    // widened operands: a point of each ball maps into the result ball
    Rational w = make_rational(Integer(1), Integer(1000));
    ComplexBall xw = x.with_radius(ceil_dyadic(w + x.radius().to_rational()));
    ComplexBall yw = y.with_radius(ceil_dyadic(w + y.radius().to_rational()));
    Rational px = xr + w / 2, py = yi - w / 3;
    ComplexBall pw = mul(xw, yw, prec);
    CHECK(pw.contains(Rational(px * yr - xi * py), Rational(px * py + xi * yr)));
  }
}

TEST_CASE("inverse of a ball containing zero is an error") {
  ComplexBall z = ComplexBall::exact(0).with_radius(Dyadic(Integer(1), -4));
  CHECK_THROWS_AS(inv(z, 64), CertificationError);
  ComplexBall near = ComplexBall::exact(Dyadic(Integer(1), -5)).with_radius(Dyadic(Integer(1), -4));
  CHECK_THROWS_AS(inv(near, 64), CertificationError);
}

TEST_CASE("ball_disjoint is symmetric") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    ComplexBall a = ball_of(random_rational(rng) / 100000, make_rational(Integer(1), Integer(1 + i)));
    ComplexBall b = ball_of(random_rational(rng) / 100000, make_rational(Integer(1), Integer(2 + i)));
    CHECK(ball_disjoint(a, b) == ball_disjoint(b, a));
  }
}
