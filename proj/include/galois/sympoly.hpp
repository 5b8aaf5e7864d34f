#pragma once

// Symmetric polynomials: the symmetry test, decomposition into elementary
// symmetric polynomials by the lex leading-term algorithm, and evaluation.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galois/poly.hpp"

namespace galois {

/// A polynomial Q in formal variables E1..En standing for e1..en.
struct ElementarySymmetricExpression {
  MultiPoly poly;
  std::size_t nvars() const { return poly.nvars(); }
};

/// e_k(x1..xn) as a MultiPoly in n variables; 0 <= k <= n.
MultiPoly elementary_symmetric(std::size_t n, std::size_t k);

/// First adjacent transposition (i, i+1) that changes p, if any.
std::optional<std::pair<std::size_t, std::size_t>> symmetry_violation(const MultiPoly& p);
bool is_symmetric(const MultiPoly& p);

/// Memoized expansions of e1^g1 * ... * en^gn, shared across decompositions.
class ElementaryPowers {
 public:
  explicit ElementaryPowers(std::size_t n);
  std::size_t nvars() const { return n_; }
  const MultiPoly& product(const Exponents& gamma);

 private:
  std::size_t n_;
  std::vector<MultiPoly> e_;
  std::map<Exponents, MultiPoly> memo_;
};

/// Throws DomainError naming the violating transposition when p is not symmetric.
ElementarySymmetricExpression decompose(const MultiPoly& p);
ElementarySymmetricExpression decompose(const MultiPoly& p, ElementaryPowers& powers);

/// Q(e1(x), ..., en(x)) expanded back into the x variables.
MultiPoly expand_elementary(const ElementarySymmetricExpression& q);

/// Exact value of q at the given elementary symmetric values.
Rational substitute_elementary(const ElementarySymmetricExpression& q, std::span<const Rational> e_values);

/// e_j of the roots of a monic polynomial: (-1)^j coeff_{n-j}(f), j = 1..n.
std::vector<Rational> elementary_values_of_roots(const UniPoly& monic_f);

/// e_1..e_m of `values`, index k-1 holding e_k. T needs copy, + and *.
template <class T>
std::vector<T> all_elementary(std::span<const T> values) {
  std::vector<T> e;
  e.reserve(values.size());
  for (const T& v : values) {
    // e_k' = e_k + e_{k-1} * v, updating from the top down
    if (e.empty()) {
      e.push_back(v);
      continue;
    }
    T top = e.back() * v;
    for (std::size_t k = e.size(); k-- > 1;) {
      T step = e[k - 1] * v;
      e[k] = e[k] + step;
    }
    e[0] = e[0] + v;
    e.push_back(std::move(top));
  }
  return e;
}

/// e_k(values) for 1 <= k <= values.size(); throws DomainError otherwise.
template <class T>
T eval_elementary(std::span<const T> values, std::size_t k) {
  if (k < 1 || k > values.size()) throw DomainError("elementary symmetric index out of range");
  return all_elementary(values)[k - 1];
}

}  // namespace galois
