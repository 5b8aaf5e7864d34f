#pragma once

// Galois resolvents: integer weights A making V = sum A_i r_i take n!
// distinct values under permutation of the roots, the degree-n! resolvent
// R(x) = prod_sigma (x - sum A_i x_sigma(i)) computed exactly by symmetric
// reduction, and the minimal polynomial of V with the Galois group read off
// as the permutations indexing its roots.
//
// Conjugate numbering: V_sigma = sum_i A_i r_sigma(i), with sigma running
// over all_permutations(n) in lexicographic order. The Galois group is the
// set of sigma with V_sigma a root of the minimal polynomial of V.

#include <optional>
#include <vector>

#include "galois/groups.hpp"
#include "galois/poly.hpp"
#include "galois/roots.hpp"

namespace galois {

/// Ball tests double their precision on ambiguity up to this many bits.
inline constexpr long kMaxPrecisionBits = 1L << 16;
/// resolvent_poly refuses larger degrees.
inline constexpr long kMaxResolventDegree = 4;

struct ResolventSpec {
  std::vector<long> weights;
  friend bool operator==(const ResolventSpec&, const ResolventSpec&) = default;
};

/// The root system refined on demand, each level doubling precision_bits.
class PrecisionLadder {
 public:
  explicit PrecisionLadder(RootSystem base);
  /// Level 0 is the base system. Returns nullptr past kMaxPrecisionBits.
  const RootSystem* at(std::size_t level);

 private:
  std::vector<RootSystem> levels_;
};

/// V_sigma for every sigma in all_permutations(n), as balls.
std::vector<ComplexBall> conjugate_values(const RootSystem& rs, const std::vector<long>& weights);
bool pairwise_disjoint(const std::vector<ComplexBall>& balls);

struct CertifiedSpec {
  ResolventSpec spec;
  RootSystem roots;  // precision at which the conjugates separated
  std::vector<ComplexBall> conjugates;
};

/// Certifies that the n! conjugate values are pairwise distinct, refining
/// up to kMaxPrecisionBits. Weights with a repeated entry are rejected at
/// once, since swapping the two positions fixes V.
std::optional<CertifiedSpec> certify_spec(const RootSystem& rs, const std::vector<long>& weights);
std::optional<CertifiedSpec> certify_spec(PrecisionLadder& ladder, const std::vector<long>& weights);

/// Nonnegative weight vectors in increasing max-norm, lexicographically
/// within each norm; returns the (skip+1)-th certified one. Throws
/// CertificationError naming the bound when the search runs out.
CertifiedSpec search_resolvent(const RootSystem& rs, long norm_bound = 8, std::size_t skip = 0);

/// Exact resolvent of a monic squarefree f of degree n <= 4; degree n!.
UniPoly resolvent_poly(const UniPoly& f, const ResolventSpec& spec);

/// Exact value of prod over pairs sigma < tau of (V_sigma - V_tau)^2 by
/// symmetric reduction; nonzero iff the conjugates are distinct. n <= 3.
Rational exact_distinctness_certificate(const UniPoly& f, const ResolventSpec& spec);

struct GaloisData {
  ResolventSpec spec;
  UniPoly min_poly;
  ComplexBall v_ball;  // V_identity
  PermGroup group;
  UniPoly resolvent;
  RootSystem roots;
  std::vector<Permutation> permutations;  // all_permutations(n)
  std::vector<ComplexBall> conjugates;    // V_sigma, same indexing

  std::size_t degree() const { return static_cast<std::size_t>(min_poly.degree()); }
  std::size_t conjugate_index(const Permutation& sigma) const;
  const ComplexBall& conjugate(const Permutation& sigma) const { return conjugates[conjugate_index(sigma)]; }
};

/// Walks the subgroups of S_n in increasing order; the first whose ball
/// product prod_{sigma in G'} (x - V_sigma) has integer coefficients that
/// divide R exactly is the Galois group, and that product is the minimal
/// polynomial of V. Requires integer coefficients, so V is an algebraic
/// integer. Throws CertificationError when no subgroup is certified within
/// kMaxPrecisionBits.
GaloisData identify_galois(const UniPoly& f, const ResolventSpec& spec, const RootSystem& rs);
GaloisData identify_galois(const UniPoly& f, const CertifiedSpec& cs);

}  // namespace galois
