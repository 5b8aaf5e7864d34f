#include "galois/sympoly.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace galois {

MultiPoly elementary_symmetric(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("elementary symmetric index exceeds variable count");
  MultiPoly e(n);
  // every 0/1 exponent vector with exactly k ones
  Exponents x(n, 0);
  for (std::size_t i = 0; i < k; ++i) x[n - 1 - i] = 1;
  do {
    e.add_term(x, Rational(1));
  } while (std::next_permutation(x.begin(), x.end()));
  return e;
}

std::optional<std::pair<std::size_t, std::size_t>> symmetry_violation(const MultiPoly& p) {
  for (std::size_t i = 0; i + 1 < p.nvars(); ++i) {
    if (!(p.swap_variables(i, i + 1) == p)) return std::make_pair(i, i + 1);
  }
  return std::nullopt;
}

bool is_symmetric(const MultiPoly& p) { return !symmetry_violation(p).has_value(); }

ElementaryPowers::ElementaryPowers(std::size_t n) : n_(n) {
  for (std::size_t k = 1; k <= n; ++k) e_.push_back(elementary_symmetric(n, k));
}

const MultiPoly& ElementaryPowers::product(const Exponents& gamma) {
  auto it = memo_.find(gamma);
  if (it != memo_.end()) return it->second;
  MultiPoly value(n_);
  std::size_t j = 0;
  while (j < gamma.size() && gamma[j] == 0) ++j;
  if (j == gamma.size()) {
    value = MultiPoly::constant(n_, Rational(1));
  } else {
    Exponents lower = gamma;
    --lower[j];
    value = product(lower) * e_[j];
  }
  return memo_.emplace(gamma, std::move(value)).first->second;
}

ElementarySymmetricExpression decompose(const MultiPoly& p) {
  ElementaryPowers powers(p.nvars());
  return decompose(p, powers);
}

ElementarySymmetricExpression decompose(const MultiPoly& p, ElementaryPowers& powers) {
  if (powers.nvars() != p.nvars()) throw DomainError("variable-count mismatch");
  if (auto bad = symmetry_violation(p)) {
    throw DomainError("polynomial is not symmetric: transposition (x" + std::to_string(bad->first + 1) + " x" +
                      std::to_string(bad->second + 1) + ") changes it");
  }
  const std::size_t n = p.nvars();
  ElementarySymmetricExpression out{MultiPoly(n)};
  MultiPoly rest = p;
  std::optional<Exponents> previous;
  while (!rest.is_zero()) {
    auto [lead, c] = rest.leading(MonomialOrder::Lex);
    if (previous && compare_monomials(lead, *previous, MonomialOrder::Lex) >= 0) {
      throw TheoremError("symmetric reduction failed to decrease the leading monomial");
    }
    Exponents gamma(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t next = i + 1 < n ? lead[i + 1] : 0;
      if (lead[i] < next) throw TheoremError("leading exponents of a symmetric polynomial are not sorted");
      gamma[i] = lead[i] - next;
    }
    rest -= c * powers.product(gamma);
    out.poly.add_term(gamma, c);
    previous = lead;
  }
  return out;
}

MultiPoly expand_elementary(const ElementarySymmetricExpression& q) {
  const std::size_t n = q.nvars();
  ElementaryPowers powers(n);
  MultiPoly out(n);
  for (const auto& [gamma, c] : q.poly.terms()) out += c * powers.product(gamma);
  return out;
}

Rational substitute_elementary(const ElementarySymmetricExpression& q, std::span<const Rational> e_values) {
  if (e_values.size() != q.nvars()) throw DomainError("elementary value count does not match variable count");
  std::vector<std::vector<Rational>> pow_cache(e_values.size(), std::vector<Rational>{Rational(1)});
  auto power = [&](std::size_t j, std::uint32_t k) -> const Rational& {
    auto& cache = pow_cache[j];
    while (cache.size() <= k) cache.push_back(Rational(cache.back() * e_values[j]));
    return cache[k];
  };
  Rational total = 0;
  for (const auto& [gamma, c] : q.poly.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (gamma[j] != 0) term *= power(j, gamma[j]);
    }
    total += term;
  }
  return total;
}

std::vector<Rational> elementary_values_of_roots(const UniPoly& monic_f) {
  if (!monic_f.is_monic()) throw DomainError("polynomial is not monic");
  auto n = static_cast<std::size_t>(monic_f.degree());
  std::vector<Rational> e(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Rational c = monic_f.coeff(n - j);
    e[j - 1] = (j % 2 == 0) ? c : Rational(-c);
  }
  return e;
}

}  // namespace galois
