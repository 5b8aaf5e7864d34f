#pragma once

// Certified root isolation for squarefree monic rational polynomials, and
// rational reconstruction of numerically enclosed quantities.
//
// Certificate: for monic f of degree n and any point z,
//   min_i |z - r_i| <= |f(z)|^(1/n).
// Each approximation is inflated to that radius; if the n disks are
// pairwise disjoint, each holds at least one root, so by pigeonhole each
// holds exactly one.

#include <optional>
#include <vector>

#include "galois/arith.hpp"
#include "galois/poly.hpp"

namespace galois {

struct RootSystem {
  UniPoly poly;
  /// Pairwise disjoint, one root each. Real roots come first in ascending
  /// order; then nonreal roots ordered by real part, then imaginary part.
  std::vector<ComplexBall> enclosures;
  /// Every radius is at most 2^-precision_bits.
  long precision_bits = 0;
  /// Working precision at which the certificate was obtained.
  long working_bits = 0;

  std::size_t size() const { return enclosures.size(); }
  /// Certified real: the ball is centered on the real axis, so its unique
  /// root equals its own conjugate.
  bool is_real(std::size_t i) const { return enclosures[i].im().is_zero(); }
};

/// Upper bound on |f(z)|^(1/deg f) at the exact center of `z`.
Dyadic certification_radius(const UniPoly& f, const ComplexBall& z, long prec);

/// Throws DomainError for non-monic, constant or non-squarefree input, and
/// CertificationError when the working-precision budget runs out.
RootSystem isolate_roots(const UniPoly& f, long precision_bits);

/// Same roots, same indices, radii at most 2^-precision_bits.
RootSystem refine(const RootSystem& rs, long precision_bits);

struct Reconstruction {
  enum class Status { Found, Absent, Ambiguous };
  Status status = Status::Absent;
  Rational value;
};

/// Classifies the ball against rationals p/q with q <= denominator_bound.
/// Found requires the ball to meet the real axis, contain p/q, and be
/// narrower than 1/(q * denominator_bound); Absent means no candidate can lie
/// in the ball; anything else is Ambiguous.
Reconstruction classify_rational(const ComplexBall& x, const Integer& denominator_bound);

/// The unique rational in the ball, or none.
std::optional<Rational> reconstruct_rational(const ComplexBall& x, const Integer& denominator_bound);

/// Rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace galois
