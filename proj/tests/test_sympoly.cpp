#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/sympoly.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

ElementarySymmetricExpression expr(std::size_t n, std::initializer_list<std::pair<Exponents, long>> terms) {
  MultiPoly q(n);
  for (const auto& [e, c] : terms) q.add_term(e, Rational(c));
  return {q};
}

// sum of the monomial over every permutation of the variables
MultiPoly symmetrize(const Exponents& e, const Rational& c) {
  MultiPoly out(e.size());
  for (const auto& p : oracle::all_perms(static_cast<int>(e.size()))) {
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(p[i])] = e[i];
    out.add_term(f, c);
  }
  return out;
}

bool invariant_under_all_perms(const MultiPoly& p) {
  for (const auto& perm : oracle::all_perms(static_cast<int>(p.nvars()))) {
    std::vector<std::size_t> q(perm.begin(), perm.end());
    if (!(p.permute_variables(q) == p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_symmetric examples") {
  MultiPoly x1 = x(2, 0), x2 = x(2, 1);
  CHECK(is_symmetric(x1 * x1 + x2 * x2));
  CHECK_FALSE(is_symmetric(x1 * x1 * x2));

  MultiPoly y1 = x(3, 0), y2 = x(3, 1), y3 = x(3, 2);
  MultiPoly vd = (y1 - y2) * (y1 - y3) * (y2 - y3);
  MultiPoly disc = vd * vd;
  CHECK(invariant_under_all_perms(disc));
  CHECK(is_symmetric(disc));
  CHECK_FALSE(is_symmetric(vd));
  CHECK_FALSE(invariant_under_all_perms(vd));
}

TEST_CASE("decompose examples") {
  MultiPoly x1 = x(2, 0), x2 = x(2, 1);
  // expansion oracle: e1^2 - 2 e2 = (x1+x2)^2 - 2 x1 x2 = x1^2 + x2^2
  CHECK((x1 + x2) * (x1 + x2) - Rational(2) * x1 * x2 == x1 * x1 + x2 * x2);
  ElementarySymmetricExpression q = decompose(x1 * x1 + x2 * x2);
  CHECK(q.poly == expr(2, {{{2, 0}, 1}, {{0, 1}, -2}}).poly);

  // (x1+x2)^2 - 4 x1 x2 = (x1 - x2)^2
  CHECK((x1 + x2) * (x1 + x2) - Rational(4) * x1 * x2 == (x1 - x2) * (x1 - x2));
  CHECK(decompose((x1 - x2) * (x1 - x2)).poly == expr(2, {{{2, 0}, 1}, {{0, 1}, -4}}).poly);

  for (std::size_t n = 1; n <= 5; ++n) {
    MultiPoly s(n);
    for (std::size_t i = 0; i < n; ++i) s += x(n, i);
    Exponents e1(n, 0);
    e1[0] = 1;
    CHECK(decompose(s).poly == MultiPoly::monomial(e1, Rational(1)));
  }
}

TEST_CASE("decompose rejects a non-symmetric input and names the transposition") {
  MultiPoly x1 = x(3, 0), x2 = x(3, 1);
  try {
    decompose(x1 * x1 * x2);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(x1 x2)") != std::string::npos);
  }
}

TEST_CASE("eval_elementary over rationals") {
  std::vector<Rational> v{Rational(2), Rational(3)};
  CHECK(eval_elementary<Rational>(v, 1) == 5);
  CHECK(eval_elementary<Rational>(v, 2) == 6);
  CHECK_THROWS_AS(eval_elementary<Rational>(v, 3), DomainError);
  CHECK_THROWS_AS(eval_elementary<Rational>(v, 0), DomainError);
  std::vector<Rational> w{Rational(1), Rational(2), Rational(3), Rational(4)};
  auto all = all_elementary<Rational>(w);
  CHECK(all == std::vector<Rational>{Rational(10), Rational(35), Rational(50), Rational(24)});
}

TEST_CASE("substitute_elementary examples") {
  UniPoly f{-2, 0, 1};
  auto e = elementary_values_of_roots(f);
  CHECK(e == std::vector<Rational>{Rational(0), Rational(-2)});
  CHECK(substitute_elementary(expr(2, {{{2, 0}, 1}, {{0, 1}, -2}}), e) == 4);
  CHECK(substitute_elementary(expr(2, {{{2, 0}, 1}, {{0, 1}, -4}}), e) == 8);

  UniPoly g{7, -1, 3, 5, 1};  // degree 4, E1 -> -coeff_3
  auto eg = elementary_values_of_roots(g);
  CHECK(substitute_elementary(expr(4, {{{1, 0, 0, 0}, 1}}), eg) == -5);
  CHECK_THROWS_AS(substitute_elementary(expr(2, {{{1, 0}, 1}}), eg), DomainError);
}

TEST_CASE("round trip on random symmetric polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nvars(1, 4), coeff(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(nvars(rng));
    MultiPoly p(n);
    for (int t = 0; t < 3; ++t) {
      Exponents e(n, 0);
      int budget = std::uniform_int_distribution<int>(0, 8)(rng);
      for (int b = 0; b < budget; ++b) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
      p += symmetrize(e, Rational(coeff(rng)));
    }
    REQUIRE(is_symmetric(p));
    ElementarySymmetricExpression q = decompose(p);
    CHECK(expand_elementary(q) == p);
  }
}

TEST_CASE("Vieta consistency for polynomials with rational roots") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    std::vector<Rational> roots;
    UniPoly f = UniPoly::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      Rational r = make_rational(Integer(root(rng)), Integer(1 + trial % 3));
      roots.push_back(r);
      f = f * UniPoly(std::vector<Rational>{Rational(-r), Rational(1)});
    }
    CHECK(all_elementary<Rational>(roots) == elementary_values_of_roots(f));
  }
}
