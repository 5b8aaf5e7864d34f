#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "galois/roots.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

UniPoly from_roots(const std::vector<long>& roots) {
  UniPoly f = UniPoly::constant(Rational(1));
  for (long r : roots) f = f * UniPoly{-r, 1};
  return f;
}

bool near(const ComplexBall& b, std::complex<double> z, double tol) {
  return std::abs(std::complex<double>(b.re().to_double(), b.im().to_double()) - z) < tol;
}

void check_disjoint_and_small(const RootSystem& rs) {
  Dyadic target(Integer(1), -rs.precision_bits);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs.enclosures[i].radius() <= target);
    for (std::size_t j = i + 1; j < rs.size(); ++j) CHECK(ball_disjoint(rs.enclosures[i], rs.enclosures[j]));
  }
}

}  // namespace

TEST_CASE("x^2 - 2 has two real roots near +-sqrt 2") {
  RootSystem rs = isolate_roots(UniPoly{-2, 0, 1}, 128);
  REQUIRE(rs.size() == 2);
  check_disjoint_and_small(rs);
  CHECK(rs.is_real(0));
  CHECK(rs.is_real(1));
  // oracle interval is far narrower than the ball, so its midpoint must lie inside
  Rational width = make_rational(Integer(1), Integer(1) << 160);
  auto [lo, hi] = oracle::newton_sqrt2_enclosure(width);
  REQUIRE(hi - lo < width);
  Rational mid = (lo + hi) / 2;
  CHECK(rs.enclosures[1].contains(mid));
  CHECK(rs.enclosures[0].contains(Rational(-mid)));
}

TEST_CASE("x^2 + 1 has roots +-i") {
  RootSystem rs = isolate_roots(UniPoly{1, 0, 1}, 100);
  REQUIRE(rs.size() == 2);
  check_disjoint_and_small(rs);
  CHECK_FALSE(rs.is_real(0));
  CHECK(rs.enclosures[0].contains(Rational(0), Rational(-1)));
  CHECK(rs.enclosures[1].contains(Rational(0), Rational(1)));
}

TEST_CASE("x^3 - 2 against a Newton oracle") {
  RootSystem rs = isolate_roots(UniPoly{-2, 0, 0, 1}, 128);
  REQUIRE(rs.size() == 3);
  check_disjoint_and_small(rs);
  std::vector<double> c{-2, 0, 0, 1};
  auto real = oracle::newton(c, {1.2, 0});
  auto upper = oracle::newton(c, {-0.6, 1.1});
  auto lower = oracle::newton(c, {-0.6, -1.1});
  CHECK(std::abs(real.real() - 1.2599210498948732) < 1e-14);
  CHECK(rs.is_real(0));
  CHECK(near(rs.enclosures[0], real, 1e-13));
  CHECK(near(rs.enclosures[1], lower, 1e-13));
  CHECK(near(rs.enclosures[2], upper, 1e-13));
}

TEST_CASE("discriminant of x^3 - 2 reconstructed from root balls") {
  RootSystem rs = isolate_roots(UniPoly{-2, 0, 0, 1}, 128);
  long prec = 256;
  ComplexBall d = ComplexBall::exact(1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      ComplexBall diff = sub(rs.enclosures[i], rs.enclosures[j], prec);
      d = mul(d, mul(diff, diff, prec), prec);
    }
  }
  auto r = reconstruct_rational(d, Integer(1));
  REQUIRE(r.has_value());
  CHECK(*r == -108);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(isolate_roots(UniPoly{1, -2, 1}, 64), DomainError);
  CHECK_THROWS_AS(isolate_roots(UniPoly{-2, 0, 2}, 64), DomainError);
  CHECK_THROWS_AS(isolate_roots(UniPoly{5}, 64), DomainError);
  try {
    isolate_roots(UniPoly{1, -2, 1}, 64);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("x - 1") != std::string::npos);
  }
}

TEST_CASE("reconstruct_rational examples") {
  auto ball = [](const Rational& c, const Rational& r) {
    ComplexBall b = ComplexBall::from_rational(c, 100);
    return b.with_radius(ceil_dyadic(r + b.radius().to_rational()));
  };
  Rational c1 = make_rational(Integer(4999999999), Integer(10000000000));
  CHECK(reconstruct_rational(ball(c1, make_rational(Integer(1), Integer(100000000))), Integer(10)) ==
        make_rational(Integer(1), Integer(2)));
  CHECK_FALSE(reconstruct_rational(ball(make_rational(Integer(3333), Integer(10000)), make_rational(Integer(1), Integer(10))),
                                   Integer(10))
                  .has_value());
  CHECK(classify_rational(ball(make_rational(Integer(3333), Integer(10000)), make_rational(Integer(1), Integer(10))), Integer(10))
            .status == Reconstruction::Status::Ambiguous);
  CHECK(reconstruct_rational(ball(Rational(-108), make_rational(Integer(1), Integer(1000000))), Integer(1)) == Rational(-108));
  // no integer within a narrow ball around 1/2
  CHECK(classify_rational(ball(make_rational(Integer(1), Integer(2)), make_rational(Integer(1), Integer(100))), Integer(1))
            .status == Reconstruction::Status::Absent);
  // off the real axis
  ComplexBall off = ComplexBall::from_rational(Rational(3), Rational(1), 64);
  CHECK(classify_rational(off, Integer(1)).status == Reconstruction::Status::Absent);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_between(make_rational(Integer(3), Integer(10)), make_rational(Integer(4), Integer(10))) ==
        make_rational(Integer(1), Integer(3)));
  CHECK(simplest_rational_between(Rational(-5), Rational(-4)) == -4);
  CHECK(simplest_rational_between(make_rational(Integer(-1), Integer(3)), Rational(2)) == 0);
}

TEST_CASE("random products of rational linear factors") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::set<long> chosen;
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    while (chosen.size() < n) chosen.insert(std::uniform_int_distribution<long>(-12, 12)(rng));
    std::vector<long> roots(chosen.begin(), chosen.end());
    UniPoly f = from_roots(roots);
    RootSystem rs = isolate_roots(f, 80);
    check_disjoint_and_small(rs);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rs.is_real(i));
      CHECK(rs.enclosures[i].contains(Rational(roots[i])));
      CHECK(reconstruct_rational(rs.enclosures[i], Integer(1)) == Rational(roots[i]));
    }
    // refinement keeps each root in its slot
    RootSystem fine = refine(rs, 200);
    check_disjoint_and_small(fine);
    for (std::size_t i = 0; i < n; ++i) CHECK(fine.enclosures[i].contains(Rational(roots[i])));
  }
}

TEST_CASE("Vieta in ball arithmetic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k < n; ++k) c[k] = std::uniform_int_distribution<long>(-9, 9)(rng);
    c[n] = 1;
    UniPoly f(c);
    if (gcd(f, f.derivative()).degree() > 0) continue;
    RootSystem rs = isolate_roots(f, 96);
    ComplexBall sum = ComplexBall::exact(0), prod = ComplexBall::exact(1);
    for (const auto& b : rs.enclosures) {
      sum = add(sum, b, 200);
      prod = mul(prod, b, 200);
    }
    CHECK(sum.contains(Rational(-c[n - 1])));
    CHECK(prod.contains(Rational(n % 2 == 0 ? c[0] : Rational(-c[0]))));
    // conjugate symmetry: nonreal roots come in pairs
    std::size_t nonreal = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) nonreal += rs.is_real(i) ? 0 : 1;
    CHECK(nonreal % 2 == 0);
  }
}
