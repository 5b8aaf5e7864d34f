#pragma once

// Dense univariate and sparse multivariate polynomials over Rational.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galois/arith.hpp"

namespace galois {

class UniPoly {
 public:
  /// Degree reported for the zero polynomial. Compares below every real degree.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  UniPoly() = default;
  /// Coefficients indexed by degree; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  static UniPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coeffs() const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(c*x)
  UniPoly scale_variable(const Rational& c) const;
  Rational eval(const Rational& x) const;
  /// Horner evaluation with outward rounding.
  ComplexBall eval(const ComplexBall& x, long prec) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "x^3 - 2". Round-trips through parse_poly.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// a = b*quotient + remainder with deg remainder < deg b. Throws DomainError if b = 0.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd by Euclid; throws DomainError if both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b = gcd
  UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

using Exponents = std::vector<std::uint32_t>;

enum class MonomialOrder { Lex, GradedLex };

/// Compare exponent vectors; x1 > x2 > ... > xn in both orders.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// The variable x_{index+1}.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponents& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  /// Total degree; UniPoly::kZeroDegree for the zero polynomial.
  long total_degree() const;

  /// Leading term in the given order; the polynomial must be nonzero.
  std::pair<Exponents, Rational> leading(MonomialOrder order) const;
  /// Terms sorted in descending order.
  std::vector<std::pair<Exponents, Rational>> sorted_terms(MonomialOrder order) const;

  /// Adds c*x^e in place.
  void add_term(const Exponents& e, const Rational& c);
  /// Exchanges variables i and j.
  MultiPoly swap_variables(std::size_t i, std::size_t j) const;
  /// Renames x_k to x_{perm[k]}.
  MultiPoly permute_variables(const std::vector<std::size_t>& perm) const;
  MultiPoly pow(unsigned k) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

enum class MultiOp { Add, Mul };
/// Throws DomainError on a variable-count mismatch.
MultiPoly multi_arith(const MultiPoly& a, const MultiPoly& b, MultiOp op);

}  // namespace galois
