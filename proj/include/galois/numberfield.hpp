#pragma once

// Arithmetic in Q[V]/(m(V)) for the minimal polynomial m of the resolvent
// value V, the roots of f written as polynomials phi_i(V), and the Galois
// group acting as V -> psi_sigma(V).

#include <memory>
#include <string>
#include <vector>

#include "galois/linalg.hpp"
#include "galois/resolvent.hpp"

namespace galois {

class NumberField {
 public:
  /// m must be monic of degree >= 1; irreducibility is the caller's claim.
  explicit NumberField(UniPoly modulus);
  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

 private:
  UniPoly modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// c_0 + c_1 V + ... + c_{d-1} V^{d-1}.
class NfElem {
 public:
  NfElem() = default;
  /// Throws DomainError unless coeffs has exactly degree() entries.
  NfElem(FieldPtr field, std::vector<Rational> coeffs);
  static NfElem from_poly(FieldPtr field, const UniPoly& p);
  static NfElem constant(FieldPtr field, const Rational& c);
  static NfElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  UniPoly to_poly() const { return UniPoly(coeffs_); }
  bool is_zero() const;
  bool is_rational() const;

  friend NfElem operator+(const NfElem& a, const NfElem& b);
  friend NfElem operator-(const NfElem& a, const NfElem& b);
  friend NfElem operator-(const NfElem& a);
  friend NfElem operator*(const NfElem& a, const NfElem& b);
  friend NfElem operator*(const Rational& c, const NfElem& a);
  friend bool operator==(const NfElem& a, const NfElem& b);

  NfElem pow(unsigned k) const;
  /// Value at a ball enclosing V.
  ComplexBall eval(const ComplexBall& v, long prec) const;
  std::string to_string(const std::string& var = "V") const;

 private:
  void check_same_field(const NfElem& other) const;
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// b with a b = 1, by extended Euclid on (a, m). Throws DomainError for a = 0.
NfElem nf_inverse(const NfElem& a);
/// p(x) evaluated at x in the field of x.
NfElem eval_poly(const UniPoly& p, const NfElem& x);
/// a(psi): the power-basis polynomial of a evaluated at psi.
NfElem compose(const NfElem& a, const NfElem& psi);
/// Column j holds the coordinates of a * V^j.
Matrix multiplication_matrix(const NfElem& a);
Rational norm(const NfElem& a);
/// (-1)^(d(d-1)/2) N(m'(V)).
Rational discriminant(const UniPoly& m);

struct Automorphism {
  Permutation sigma;      // element of the Galois group
  NfElem image;           // psi_sigma = sigma(V)
  Permutation root_perm;  // sigma(phi_i) = phi_{root_perm(i)}
};

struct SplittingField {
  GaloisData galois;
  FieldPtr field;
  std::vector<NfElem> roots;                // phi_1..phi_n
  std::vector<Automorphism> automorphisms;  // in galois.group element order

  std::size_t degree() const { return field->degree(); }
  NfElem generator() const { return NfElem::generator(field); }
  const Automorphism& automorphism(const Permutation& sigma) const;
  /// a(psi_sigma) reduced mod m.
  NfElem apply(const Permutation& sigma, const NfElem& a) const;
  /// Matrix of apply(sigma, .) in the power basis; column j is the image of V^j.
  Matrix matrix(const Permutation& sigma) const;
};

/// phi_i with phi_i(V) = r_i: ball Vandermonde solve over the conjugates
/// V_pi (pi in the group), integer reconstruction of disc(m) c_j, exact
/// check f(phi_i) = 0 mod m, and ball check that phi_i(V) lies in root ball
/// i only. Precision doubles on failure up to kMaxPrecisionBits.
std::vector<NfElem> express_roots(const GaloisData& gd, const RootSystem& rs);

/// psi_sigma = sum_i A_i phi_sigma(i), checked exactly (m(psi) = 0) and by
/// balls (psi(V) lies in the ball of V_sigma only), with the induced root
/// permutation computed by exact comparison.
SplittingField automorphism_table(const GaloisData& gd, std::vector<NfElem> roots, const RootSystem& rs);

/// express_roots followed by automorphism_table.
SplittingField build_splitting_field(const GaloisData& gd);

}  // namespace galois
