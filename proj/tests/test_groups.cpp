#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "galois/groups.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<oracle::Perm> to_oracle(const PermGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.push_back(p.images());
  return out;
}

PermGroup klein_four() {
  return PermGroup({Permutation::identity(4), P({1, 0, 3, 2}), P({2, 3, 0, 1}), P({3, 2, 1, 0})});
}

PermGroup conjugate(const PermGroup& h, const Permutation& by) {
  std::vector<Permutation> v;
  for (const auto& x : h.elements()) v.push_back(by * x * by.inverse());
  return PermGroup(std::move(v));
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(P({0, 0, 1}), DomainError);
  Permutation a = P({1, 2, 0});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_cycle_string() == "(1 2 3)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  // (a*b)(i) = a(b(i))
  Permutation b = P({1, 0, 2});
  CHECK((a * b)(0) == a(b(0)));
}

TEST_CASE("closure examples") {
  CHECK(closure({P({1, 0})}, 2).order() == 2);
  CHECK(closure({P({1, 0, 2}), P({1, 2, 0})}, 3).order() == 6);
  PermGroup trivial = closure({}, 3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements().front().is_identity());
  CHECK_THROWS_AS(closure({P({1, 0}), P({1, 2, 0})}, 2), DomainError);
}

TEST_CASE("PermGroup rejects non-groups") {
  CHECK_THROWS_AS(PermGroup({P({1, 0, 2})}), DomainError);
  CHECK_THROWS_AS(PermGroup({Permutation::identity(3), P({1, 2, 0})}), DomainError);
}

TEST_CASE("subgroup counts against brute-force subset enumeration") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(oracle::count_subgroups_brute_force(to_oracle(symmetric_group(3))) == 6);
  CHECK(all_subgroups(symmetric_group(2)).size() == 2);
  PermGroup a4 = alternating_group(4);
  CHECK(a4.order() == 12);
  CHECK(oracle::count_subgroups_brute_force(to_oracle(a4)) == 10);
  CHECK(all_subgroups(a4).size() == 10);

  PermGroup d4 = closure({P({1, 2, 3, 0}), P({0, 3, 2, 1})}, 4);
  CHECK(d4.order() == 8);
  CHECK(oracle::count_subgroups_brute_force(to_oracle(d4)) == 10);
  CHECK(all_subgroups(d4).size() == 10);

  // S4 has 30 subgroups (too many subsets to brute force; known lattice)
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
}

TEST_CASE("subgroups are sorted by order then lexicographically") {
  auto subs = all_subgroups(symmetric_group(3));
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
  CHECK_THROWS_AS(all_subgroups(symmetric_group(5)), DomainError);
}

TEST_CASE("arrangement array examples") {
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_four();
  auto blocks = arrangement_array(a4, v4, Arrangement::identity(4));
  CHECK(blocks.size() == 3);
  std::set<Arrangement> all_rows;
  for (const auto& b : blocks) {
    CHECK(b.rows.size() == 4);
    CHECK_FALSE(b.group().closure_violation().has_value());
    CHECK(substitution_group(b.group()) == v4);
    all_rows.insert(b.rows.begin(), b.rows.end());
  }
  CHECK(all_rows.size() == 12);

  auto one = arrangement_array(a4, a4, Arrangement::identity(4));
  CHECK(one.size() == 1);
  CHECK(one[0].rows.size() == 12);

  auto singles = arrangement_array(a4, closure({}, 4), Arrangement::identity(4));
  CHECK(singles.size() == 12);
  for (const auto& b : singles) CHECK(substitution_group(b.group()).order() == 1);

  CHECK_THROWS_AS(arrangement_array(v4, a4, Arrangement::identity(4)), DomainError);
}

TEST_CASE("full orbit of S3 gives S3 as substitution group") {
  PermGroup s3 = symmetric_group(3);
  auto blocks = arrangement_array(s3, s3, Arrangement::identity(3));
  CHECK(substitution_group(blocks[0].group()) == s3);
}

TEST_CASE("substitution group of every block is h conjugated by the base") {
  std::mt19937_64 rng(17);
  PermGroup s4 = symmetric_group(4);
  auto perms = all_permutations(4);
  for (const auto& h : all_subgroups(s4)) {
    Arrangement base(perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)].images());
    auto blocks = arrangement_array(s4, h, base);
    CHECK(blocks.size() * h.order() == s4.order());
    Permutation base_perm(base.order());
    for (const auto& b : blocks) {
      CHECK(conjugate(substitution_group(b.group()), base_perm.inverse()) == h);
    }
  }
}

TEST_CASE("closure validator finds a witness") {
  std::mt19937_64 rng(23);
  auto perms = all_permutations(4);
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Arrangement> rows;
    for (int k = 0; k < 3; ++k) {
      rows.emplace_back(perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)].images());
    }
    ArrangementGroup ag(rows);
    auto w = ag.closure_violation();
    if (!w) continue;
    ++violations;
    CHECK_FALSE(ag.contains(w->gamma.substituted(w->alpha.transition_to(w->beta))));
    CHECK_THROWS_AS(substitution_group(ag), DomainError);
  }
  CHECK(violations > 0);
}
