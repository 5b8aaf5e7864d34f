// Runs the acceptance suite, printing one line per criterion, then checks
// the pinned counts against brute-force oracles that share no code with the
// library's group and field routines.
#include <iostream>
#include <set>

#include "galois/acceptance.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

std::vector<oracle::Perm> as_oracle(const PermGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.push_back(p.images());
  return out;
}

// cosets of the Klein group inside the even permutations of 4 letters
bool quartic_oracle() {
  std::vector<oracle::Perm> a4;
  for (const auto& p : oracle::all_perms(4)) {
    if (oracle::parity(p) == 0) a4.push_back(p);
  }
  const std::vector<oracle::Perm> v4 = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::set<std::set<oracle::Perm>> cosets;
  for (const auto& g : a4) {
    std::set<oracle::Perm> c;
    for (const auto& h : v4) c.insert(oracle::compose(g, h));
    cosets.insert(c);
  }
  return a4.size() == 12 && cosets.size() == 3;
}

bool report(bool pass, const std::string& what) {
  std::cout << (pass ? "PASS" : "FAIL") << " [oracle] " << what << std::endl;
  return pass;
}

}  // namespace

int main() {
  AcceptanceSuite suite;
  bool all = true;
  auto results = suite.run([&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
  });
  if (results.size() != 8) all = report(false, "expected 8 criteria") && all;

  all = report(quartic_oracle(), "A4 has 12 elements in 3 cosets of V4") && all;
  const auto& corpus = suite.corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    const int brute = oracle::count_subgroups_brute_force(as_oracle(c.field.galois.group));
    const auto pinned = reference_corpus()[i].subgroups;
    all = report(brute == static_cast<int>(pinned) && brute == static_cast<int>(c.lattice.entries.size()),
                 c.text + ": brute-force subgroup count " + std::to_string(brute) + ", pinned " +
                     std::to_string(pinned)) &&
          all;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
