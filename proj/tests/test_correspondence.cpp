#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/correspondence.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

SplittingField field_of(const UniPoly& f, std::size_t skip = 0) {
  RootSystem rs = isolate_roots(f, 128);
  return build_splitting_field(identify_galois(f, search_resolvent(rs, 8, skip)));
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

PermGroup trivial_of(const SplittingField& sf) { return closure({}, sf.roots.size()); }

}  // namespace

TEST_CASE("full group gives Q, trivial group gives everything") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 1});
  Subfield q = field_from_subgroup(sf.galois.group, sf);
  CHECK(q.dim() == 1);
  Subfield all = field_from_subgroup(trivial_of(sf), sf);
  CHECK(all.dim() == sf.degree());
  CHECK(fixed_field(trivial_of(sf), sf).dim() == sf.degree());
  CHECK(fixed_field(sf.galois.group, sf).dim() == 1);
  CHECK_FALSE(fields_equal(q, all));
  CHECK(fields_equal(q, q));
  CHECK(fields_equal(all, all));
}

TEST_CASE("x^3 - 2: the order-3 subgroup fixes Q(sqrt -3)") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 1});
  PermGroup c3 = alternating_group(3);
  Subfield l = field_from_subgroup(c3, sf);
  REQUIRE(l.dim() == 2);
  CHECK(fields_equal(l, fixed_field(c3, sf)));
  NfElem u = l.elements()[1];
  CHECK_FALSE(u.is_rational());
  UniPoly mp = minimal_polynomial(u);
  REQUIRE(mp.degree() == 2);
  Rational disc = mp.coeff(1) * mp.coeff(1) - 4 * mp.coeff(0);
  CHECK(is_rational_square(disc / -108));
  CHECK(averaging_check(u, c3, sf));
}

TEST_CASE("x^3 - 2 lattice: six subfields with dims matching the index") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 1});
  CorrespondenceReport r = correspondence_lattice(sf);
  REQUIRE(r.entries.size() == 6);
  std::vector<std::size_t> dims, orders;
  for (const auto& e : r.entries) {
    dims.push_back(e.field.dim());
    orders.push_back(e.subgroup.order());
    CHECK(e.equal);
    CHECK(e.field.dim() == 6 / e.subgroup.order());
    REQUIRE(e.primitive.has_value());
    CHECK(static_cast<std::size_t>(e.primitive->min_poly.degree()) == e.field.dim());
    CHECK(eval_poly(e.primitive->min_poly, e.primitive->element).is_zero());
  }
  // dims are the indices 6/|H| of the orders {1, 2, 2, 2, 3, 6}
  std::sort(dims.begin(), dims.end());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  CHECK(dims == std::vector<std::size_t>{1, 2, 3, 3, 3, 6});
  CHECK(r.subfields_by_kernels == 6);
  for (const auto& c : r.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
  CHECK(r.all_pass());
}

TEST_CASE("x^4 - 2 lattice: ten subgroups, ten distinct subfields") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 0, 1});
  std::vector<oracle::Perm> elems;
  for (const auto& p : sf.galois.group.elements()) elems.push_back(p.images());
  CHECK(oracle::count_subgroups_brute_force(elems) == 10);
  CorrespondenceReport r = correspondence_lattice(sf);
  CHECK(r.entries.size() == 10);
  CHECK(r.subfields_by_kernels == 10);
  for (const auto& c : r.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("x^2 - 2 lattice") {
  SplittingField sf = field_of(UniPoly{-2, 0, 1});
  CorrespondenceReport r = correspondence_lattice(sf);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].field.dim() == 2);
  CHECK(r.entries[1].field.dim() == 1);
  CHECK(r.all_pass());
}

TEST_CASE("averaging examples") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 1});
  NfElem q = NfElem::constant(sf.field, make_rational(Integer(-5), Integer(7)));
  for (const auto& h : all_subgroups(sf.galois.group)) CHECK(averaging_check(q, h, sf));
  CHECK(averaging_check(sf.generator(), trivial_of(sf), sf));
  CHECK_THROWS_AS(averaging_check(sf.generator(), sf.galois.group, sf), DomainError);
}

TEST_CASE("primitive element independence") {
  SplittingField a = field_of(UniPoly{-2, 0, 1}, 0);
  SplittingField b = field_of(UniPoly{-2, 0, 1}, 1);
  CHECK(a.galois.spec.weights == std::vector<long>{0, 1});
  CHECK(b.galois.spec.weights == std::vector<long>{1, 0});
  // V_b = -V_a
  CHECK(field_isomorphism(b, a).image_of_generator == -a.generator());
  for (const auto& h : all_subgroups(a.galois.group)) CHECK(primitive_independence_check(h, a, b));

  SplittingField c = field_of(UniPoly{-2, 0, 0, 1}, 0);
  SplittingField d = field_of(UniPoly{-2, 0, 0, 1}, 1);
  CHECK_FALSE(c.galois.spec == d.galois.spec);
  for (const auto& h : all_subgroups(c.galois.group)) CHECK(primitive_independence_check(h, c, d));
}

TEST_CASE("subfield construction rejects a span that is not a field") {
  SplittingField sf = field_of(UniPoly{-2, 0, 0, 1});
  NfElem one = NfElem::constant(sf.field, Rational(1));
  CHECK_THROWS_AS(Subfield(sf.field, {one, sf.generator()}), TheoremError);
  CHECK_THROWS_AS(Subfield(sf.field, {sf.generator()}), TheoremError);
}

TEST_CASE("minimal polynomial of the generator is m") {
  SplittingField sf = field_of(UniPoly{-1, -3, 0, 1});
  CHECK(minimal_polynomial(sf.generator()) == sf.galois.min_poly);
  CHECK(minimal_polynomial(NfElem::constant(sf.field, Rational(4))) == UniPoly{-4, 1});
}
