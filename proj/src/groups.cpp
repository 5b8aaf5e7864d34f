#include "galois/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace galois {

namespace {

bool is_bijection(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || static_cast<std::size_t>(x) >= v.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

std::string letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw DomainError("not a permutation");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different degrees");
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

PermGroup::PermGroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw DomainError("a group has at least the identity");
  const std::size_t n = elements_.front().size();
  for (const auto& p : elements_) {
    if (p.size() != n) throw DomainError("group elements of mixed degree");
  }
  if (!contains(Permutation::identity(n))) throw DomainError("element set lacks the identity");
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) throw DomainError("element set not closed under inverse");
    for (const auto& b : elements_) {
      if (!contains(a * b)) throw DomainError("element set not closed under composition");
    }
  }
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return g.contains(p); });
}

bool operator<(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

std::string PermGroup::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ", ";
    os << elements_[i].to_cycle_string();
  }
  os << '}';
  return os.str();
}

PermGroup closure(const std::vector<Permutation>& generators, std::size_t n) {
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("generators of mixed degree");
  }
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(std::vector<Permutation>(seen.begin(), seen.end()));
}

PermGroup symmetric_group(std::size_t n) { return PermGroup(all_permutations(n)); }

PermGroup alternating_group(std::size_t n) {
  std::vector<Permutation> even;
  for (const auto& p : all_permutations(n)) {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p(i) > p(j)) ++inversions;
    if (inversions % 2 == 0) even.push_back(p);
  }
  return PermGroup(std::move(even));
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  if (g.order() > kMaxGroupOrder) throw DomainError("group order exceeds the enumeration cap");
  const auto& el = g.elements();
  const std::size_t m = el.size();
  const std::size_t n = g.degree();
  std::set<PermGroup> found;
  found.insert(closure({}, n));
  // two generators suffice at this order; three are closed for good measure
  for (std::size_t i = 0; i < m; ++i) {
    found.insert(closure({el[i]}, n));
    for (std::size_t j = i + 1; j < m; ++j) {
      found.insert(closure({el[i], el[j]}, n));
      for (std::size_t k = j + 1; k < m; ++k) found.insert(closure({el[i], el[j], el[k]}, n));
    }
  }
  return {found.begin(), found.end()};
}

Arrangement::Arrangement(std::vector<int> order) : order_(std::move(order)) {
  if (!is_bijection(order_)) throw DomainError("an arrangement lists every root exactly once");
}

Arrangement Arrangement::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Arrangement(std::move(v));
}

Arrangement Arrangement::acted_on_by(const Permutation& sigma) const {
  Permutation inv = sigma.inverse();
  std::vector<int> v(order_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = order_[static_cast<std::size_t>(inv(i))];
  return Arrangement(std::move(v));
}

Permutation Arrangement::transition_to(const Arrangement& target) const {
  std::vector<int> phi(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) phi[static_cast<std::size_t>(order_[i])] = target.order_[i];
  return Permutation(std::move(phi));
}

Arrangement Arrangement::substituted(const Permutation& s) const {
  std::vector<int> v(order_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s(static_cast<std::size_t>(order_[i]));
  return Arrangement(std::move(v));
}

std::string Arrangement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) s += ' ';
    s += letter(order_[i]);
  }
  return s;
}

ArrangementGroup::ArrangementGroup(std::vector<Arrangement> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool ArrangementGroup::contains(const Arrangement& a) const {
  return std::binary_search(rows_.begin(), rows_.end(), a);
}

std::optional<ClosureWitness> ArrangementGroup::closure_violation() const {
  for (const auto& alpha : rows_) {
    for (const auto& beta : rows_) {
      Permutation phi = alpha.transition_to(beta);
      for (const auto& gamma : rows_) {
        if (!contains(gamma.substituted(phi))) return ClosureWitness{alpha, beta, gamma};
      }
    }
  }
  return std::nullopt;
}

std::vector<ArrangementBlock> arrangement_array(const PermGroup& g, const PermGroup& h, const Arrangement& base) {
  if (!h.is_subgroup_of(g)) throw DomainError("h is not a subgroup of g");
  if (base.size() != g.degree()) throw DomainError("arrangement length does not match group degree");
  std::vector<ArrangementBlock> blocks;
  std::set<Permutation> covered;
  // elements are sorted, so the first uncovered element is its coset's smallest
  for (const auto& sigma : g.elements()) {
    if (covered.count(sigma)) continue;
    ArrangementBlock block;
    block.representative = sigma;
    for (const auto& tau : h.elements()) {
      Permutation st = sigma * tau;
      covered.insert(st);
      block.rows.push_back(base.acted_on_by(st));
      block.row_elements.push_back(st);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

PermGroup substitution_group(const ArrangementGroup& ag) {
  if (auto w = ag.closure_violation()) {
    throw DomainError("not an arrangement group: the substitution taking [" + w->alpha.to_string() + "] to [" +
                      w->beta.to_string() + "] sends [" + w->gamma.to_string() + "] outside the set");
  }
  std::vector<Permutation> subs;
  for (const auto& alpha : ag.rows()) {
    for (const auto& beta : ag.rows()) subs.push_back(alpha.transition_to(beta));
  }
  return PermGroup(std::move(subs));
}

}  // namespace galois
