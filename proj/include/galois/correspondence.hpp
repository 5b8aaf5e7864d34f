#pragma once

// Subfields of the splitting field attached to subgroups of the Galois
// group in two independent ways, and the checks that certify the
// correspondence between them.
//
//   field_from_subgroup(H): the Q-algebra generated by the elementary
//     symmetric values e_k(sigma(V) : sigma in H).
//   fixed_field(H): the common kernel of apply_sigma - id for sigma in H.

#include <optional>
#include <string>
#include <vector>

#include "galois/numberfield.hpp"

namespace galois {

/// A Q-subspace of the splitting field closed under multiplication and
/// containing 1, stored as a reduced echelon basis of power-basis coordinates.
class Subfield {
 public:
  Subfield() = default;
  /// Canonical form of span(spanning). Throws TheoremError if the span is
  /// not closed under multiplication or misses 1.
  Subfield(FieldPtr field, const std::vector<NfElem>& spanning);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return echelon_.rows.size(); }
  const Matrix& basis() const { return echelon_.rows; }
  std::vector<NfElem> elements() const;
  bool contains(const NfElem& x) const;
  bool contains(const Subfield& other) const;

 private:
  FieldPtr field_;
  Echelon echelon_;
};

/// Equality of canonical bases. Throws DomainError when the ambient fields differ.
bool fields_equal(const Subfield& a, const Subfield& b);

/// e_1..e_m of the H-conjugates of V, the generators of field_from_subgroup.
std::vector<NfElem> subgroup_generators(const PermGroup& h, const SplittingField& sf);
Subfield field_from_subgroup(const PermGroup& h, const SplittingField& sf);
Subfield fixed_field(const PermGroup& h, const SplittingField& sf);

/// The average of apply_sigma(x) over sigma in h, exactly.
NfElem subgroup_average(const NfElem& x, const PermGroup& h, const SplittingField& sf);
/// x equals its average over h. Throws DomainError unless h fixes x.
bool averaging_check(const NfElem& x, const PermGroup& h, const SplittingField& sf);

/// Monic minimal polynomial over Q, from the first linear dependence among
/// the powers of x.
UniPoly minimal_polynomial(const NfElem& x);

struct PrimitiveElement {
  NfElem element;
  UniPoly min_poly;
  std::vector<long> combination;  // coefficients on the generators
};

/// g_1, then integer combinations of the generators with entries in [-3, 3]
/// by increasing max-norm; the first whose minimal polynomial has degree
/// equal to the subfield dimension.
std::optional<PrimitiveElement> find_primitive_element(const Subfield& l, const std::vector<NfElem>& generators);

/// An embedding of sf2's field into sf's field: V2 written in V1, checked
/// exactly against the minimal polynomial of V2 and the root expressions.
struct FieldIsomorphism {
  NfElem image_of_generator;
  NfElem map(const NfElem& x) const { return compose(x, image_of_generator); }
};

/// Requires both fields to come from the same polynomial with the same root
/// numbering. Throws TheoremError when the exact checks fail.
FieldIsomorphism field_isomorphism(const SplittingField& from, const SplittingField& to);

/// field_from_subgroup(h, sf2) carried into sf equals field_from_subgroup(h, sf).
bool primitive_independence_check(const PermGroup& h, const SplittingField& sf, const SplittingField& sf2);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;  // first witness on failure
};

struct SubgroupEntry {
  PermGroup subgroup;
  Subfield field;  // from the subgroup's symmetric values
  Subfield fixed;
  bool equal = false;
  std::optional<PrimitiveElement> primitive;
};

struct CorrespondenceReport {
  std::vector<SubgroupEntry> entries;  // one per subgroup, in enumeration order
  std::size_t subfields_by_kernels = 0;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Runs both constructions for every subgroup and records each claim of the
/// correspondence as a named check; failures carry the witnessing
/// subgroup(s) and do not stop the remaining checks.
CorrespondenceReport correspondence_lattice(const SplittingField& sf);

}  // namespace galois
