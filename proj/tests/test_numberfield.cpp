#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/numberfield.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

SplittingField field_of(const UniPoly& f) {
  return build_splitting_field(identify_galois(f, search_resolvent(isolate_roots(f, 128))));
}

NfElem random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k->degree(); ++i) {
    c.push_back(make_rational(Integer(std::uniform_int_distribution<long>(-5, 5)(rng)),
                              Integer(std::uniform_int_distribution<long>(1, 3)(rng))));
  }
  return NfElem(k, std::move(c));
}

}  // namespace

TEST_CASE("inverse examples in Q[V]/(V^2 - 2)") {
  auto k = std::make_shared<const NumberField>(UniPoly{-2, 0, 1});
  NfElem one = NfElem::constant(k, Rational(1));
  NfElem v = NfElem::generator(k);
  CHECK(nf_inverse(one) == one);
  CHECK(nf_inverse(v) == make_rational(Integer(1), Integer(2)) * v);
  CHECK(nf_inverse(one + v) == v - one);
  CHECK_THROWS_AS(nf_inverse(NfElem::constant(k, Rational(0))), DomainError);
}

TEST_CASE("inverse property on random elements") {
  std::mt19937_64 rng(3);
  auto k = std::make_shared<const NumberField>(UniPoly{-2, 0, 0, 1});
  for (int t = 0; t < 30; ++t) {
    NfElem a = random_elem(k, rng);
    if (a.is_zero()) continue;
    CHECK(a * nf_inverse(a) == NfElem::constant(k, Rational(1)));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(UniPoly{-2, 0, 1}) == 8);
  CHECK(discriminant(UniPoly{-2, 0, 0, 1}) == -108);
  // cubic x^3 + p x + q: -4p^3 - 27q^2
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    long p = std::uniform_int_distribution<long>(-6, 6)(rng);
    long q = std::uniform_int_distribution<long>(-6, 6)(rng);
    CHECK(discriminant(UniPoly{q, p, 0, 1}) == -4 * p * p * p - 27 * q * q);
  }
  // quartic against the numeric product of squared root differences
  UniPoly f{3, -1, 2, 0, 1};
  auto z = oracle::durand_kerner({3, -1, 2, 0, 1});
  std::complex<long double> prod = 1;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) prod *= (z[i] - z[j]) * (z[i] - z[j]);
  CHECK(std::abs(prod.real() - discriminant(f).get_d()) < 1e-6L * std::abs(prod.real()));
}

TEST_CASE("x^2 - 2: roots, automorphisms") {
  SplittingField sf = field_of(UniPoly{-2, 0, 1});
  NfElem v = sf.generator();
  // V = r_2 = sqrt 2 for weights (0, 1)
  REQUIRE(sf.galois.spec.weights == std::vector<long>{0, 1});
  CHECK(sf.roots[0] == -v);
  CHECK(sf.roots[1] == v);
  REQUIRE(sf.automorphisms.size() == 2);
  CHECK(sf.automorphisms[0].sigma.is_identity());
  CHECK(sf.automorphisms[0].image == v);
  CHECK(sf.automorphisms[0].root_perm.is_identity());
  CHECK(sf.automorphisms[1].image == -v);
  CHECK(sf.automorphisms[1].root_perm == Permutation({1, 0}));
}

TEST_CASE("x^4 + 1: roots are the odd powers of a primitive 8th root of unity") {
  SplittingField sf = field_of(UniPoly{1, 0, 0, 0, 1});
  REQUIRE(sf.degree() == 4);
  NfElem w = sf.roots[0];
  NfElem one = NfElem::constant(sf.field, Rational(1));
  CHECK(w.pow(4) == -one);
  std::vector<NfElem> expect{w, w.pow(3), -w, -w.pow(3)};
  for (const auto& phi : sf.roots) {
    CHECK(std::count(expect.begin(), expect.end(), phi) == 1);
  }
}

TEST_CASE("x^3 - 2: roots, all six automorphisms") {
  UniPoly f{-2, 0, 0, 1};
  SplittingField sf = field_of(f);
  CHECK(sf.degree() == 6);
  for (const auto& phi : sf.roots) {
    CHECK(phi.to_poly().degree() <= 5);
    CHECK(eval_poly(f, phi).is_zero());
  }
  std::set<Permutation> perms;
  for (const auto& a : sf.automorphisms) {
    perms.insert(a.root_perm);
    CHECK(eval_poly(sf.galois.min_poly, a.image).is_zero());
  }
  std::set<Permutation> s3;
  for (const auto& p : all_permutations(3)) s3.insert(p);
  CHECK(perms == s3);
}

TEST_CASE("automorphism properties on the corpus") {
  std::mt19937_64 rng(29);
  for (const UniPoly& f : {UniPoly{-2, 0, 1}, UniPoly{1, 0, 1}, UniPoly{-2, 0, 0, 1}, UniPoly{-1, -3, 0, 1},
                           UniPoly{1, 0, 0, 0, 1}, UniPoly{-2, 0, 0, 0, 1}}) {
    SplittingField sf = field_of(f);
    const auto& g = sf.galois.group;
    const std::size_t n = static_cast<std::size_t>(f.degree());
    // sum and product of the roots
    NfElem sum = NfElem::constant(sf.field, Rational(0));
    NfElem prod = NfElem::constant(sf.field, Rational(1));
    for (const auto& phi : sf.roots) {
      sum = sum + phi;
      prod = prod * phi;
    }
    CHECK(sum == NfElem::constant(sf.field, Rational(-f.coeff(n - 1))));
    CHECK(prod == NfElem::constant(sf.field, n % 2 ? Rational(-f.coeff(0)) : f.coeff(0)));
    for (const auto& s : g.elements()) {
      NfElem a = random_elem(sf.field, rng), b = random_elem(sf.field, rng);
      CHECK(sf.apply(s, a * b) == sf.apply(s, a) * sf.apply(s, b));
      CHECK(sf.apply(s, a + b) == sf.apply(s, a) + sf.apply(s, b));
      NfElem c = NfElem::constant(sf.field, make_rational(Integer(7), Integer(3)));
      CHECK(sf.apply(s, c) == c);
      for (const auto& t : g.elements()) {
        NfElem basis = NfElem::constant(sf.field, Rational(1));
        for (std::size_t j = 0; j < sf.degree(); ++j) {
          CHECK(sf.apply(s, sf.apply(t, basis)) == sf.apply(s * t, basis));
          basis = basis * sf.generator();
        }
      }
    }
    // root permutations form a group equal to the Galois group
    std::vector<Permutation> perms;
    for (const auto& a : sf.automorphisms) perms.push_back(a.root_perm);
    CHECK(PermGroup(perms) == g);
  }
}
