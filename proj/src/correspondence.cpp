#include "galois/correspondence.hpp"

#include <algorithm>
#include <set>

#include "galois/sympoly.hpp"

namespace galois {

namespace {

Vector coords(const NfElem& x) { return x.coeffs(); }

Echelon echelon_of(const std::vector<NfElem>& xs) {
  Matrix m;
  for (const auto& x : xs) m.push_back(coords(x));
  return rref(std::move(m));
}

void require_subgroup(const PermGroup& h, const SplittingField& sf) {
  if (!h.is_subgroup_of(sf.galois.group)) {
    throw DomainError("subgroup " + h.to_string() + " is not contained in the Galois group");
  }
}

std::string group_label(const PermGroup& h) { return h.to_string(); }

// Common kernel of (M - I) over the given matrices.
Matrix common_fixed_space(const std::vector<const Matrix*>& mats, std::size_t d) {
  Matrix stacked;
  for (const Matrix* m : mats) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector row = (*m)[i];
      row[i] -= 1;
      stacked.push_back(std::move(row));
    }
  }
  if (stacked.empty()) return identity_matrix(d);
  return kernel(stacked, d);
}

std::vector<NfElem> rows_to_elements(const FieldPtr& field, const Matrix& rows) {
  std::vector<NfElem> out;
  for (const auto& r : rows) out.emplace_back(field, r);
  return out;
}

// Next vector in [-k, k]^m in lexicographic order.
bool next_combination(std::vector<long>& c, long k) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < k) {
      ++c[i];
      return true;
    }
    c[i] = -k;
  }
  return false;
}

}  // namespace

Subfield::Subfield(FieldPtr field, const std::vector<NfElem>& spanning) : field_(std::move(field)) {
  echelon_ = echelon_of(spanning);
  if (!contains(NfElem::constant(field_, Rational(1)))) throw TheoremError("subfield span does not contain 1");
  auto els = elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j)
      if (!contains(els[i] * els[j])) throw TheoremError("subfield span is not closed under multiplication");
}

std::vector<NfElem> Subfield::elements() const { return rows_to_elements(field_, echelon_.rows); }

bool Subfield::contains(const NfElem& x) const { return in_row_space(echelon_, coords(x)); }

bool Subfield::contains(const Subfield& other) const {
  for (const auto& r : other.basis()) {
    if (!in_row_space(echelon_, r)) return false;
  }
  return true;
}

bool fields_equal(const Subfield& a, const Subfield& b) {
  if (!a.field() || !b.field() || !(a.field()->modulus() == b.field()->modulus())) {
    throw DomainError("subfields of different ambient fields");
  }
  return a.basis() == b.basis();
}

std::vector<NfElem> subgroup_generators(const PermGroup& h, const SplittingField& sf) {
  require_subgroup(h, sf);
  std::vector<NfElem> conj;
  for (const auto& s : h.elements()) conj.push_back(sf.automorphism(s).image);
  return all_elementary<NfElem>(conj);
}

Subfield field_from_subgroup(const PermGroup& h, const SplittingField& sf) {
  std::vector<NfElem> span{NfElem::constant(sf.field, Rational(1))};
  for (auto& g : subgroup_generators(h, sf)) span.push_back(std::move(g));
  Echelon e = echelon_of(span);
  // close the span under products until the dimension settles
  for (;;) {
    auto basis = rows_to_elements(sf.field, e.rows);
    std::vector<NfElem> grown = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) grown.push_back(basis[i] * basis[j]);
    Echelon next = echelon_of(grown);
    if (next.rows.size() == e.rows.size()) break;
    e = std::move(next);
  }
  return Subfield(sf.field, rows_to_elements(sf.field, e.rows));
}

Subfield fixed_field(const PermGroup& h, const SplittingField& sf) {
  require_subgroup(h, sf);
  std::vector<Matrix> mats;
  for (const auto& s : h.elements()) mats.push_back(sf.matrix(s));
  std::vector<const Matrix*> ptrs;
  for (const auto& m : mats) ptrs.push_back(&m);
  return Subfield(sf.field, rows_to_elements(sf.field, common_fixed_space(ptrs, sf.degree())));
}

NfElem subgroup_average(const NfElem& x, const PermGroup& h, const SplittingField& sf) {
  require_subgroup(h, sf);
  NfElem sum = NfElem::constant(sf.field, Rational(0));
  for (const auto& s : h.elements()) sum = sum + sf.apply(s, x);
  return Rational(1, static_cast<unsigned long>(h.order())) * sum;
}

bool averaging_check(const NfElem& x, const PermGroup& h, const SplittingField& sf) {
  require_subgroup(h, sf);
  for (const auto& s : h.elements()) {
    if (!(sf.apply(s, x) == x)) throw DomainError("element is not fixed by " + s.to_cycle_string());
  }
  return subgroup_average(x, h, sf) == x;
}

UniPoly minimal_polynomial(const NfElem& x) {
  const std::size_t d = x.field()->degree();
  std::vector<NfElem> powers{NfElem::constant(x.field(), Rational(1))};
  for (std::size_t k = 1; k <= d; ++k) {
    powers.push_back(powers.back() * x);
    // columns are the powers; a kernel vector is a dependence
    Matrix cols;
    for (const auto& p : powers) cols.push_back(p.coeffs());
    Matrix ker = kernel(transpose(cols), powers.size());
    if (ker.empty()) continue;
    Vector rel = ker.front();
    Rational lead = rel.back();
    for (auto& c : rel) c /= lead;
    return UniPoly(std::move(rel));
  }
  throw TheoremError("powers of a field element are independent beyond the field degree");
}

std::optional<PrimitiveElement> find_primitive_element(const Subfield& l, const std::vector<NfElem>& generators) {
  const auto accept = [&](const NfElem& x, std::vector<long> comb) -> std::optional<PrimitiveElement> {
    if (!l.contains(x)) return std::nullopt;
    UniPoly mp = minimal_polynomial(x);
    if (static_cast<std::size_t>(mp.degree()) != l.dim()) return std::nullopt;
    return PrimitiveElement{x, std::move(mp), std::move(comb)};
  };
  const std::size_t m = generators.size();
  if (m == 0) return std::nullopt;
  std::vector<long> first(m, 0);
  first[0] = 1;
  if (auto p = accept(generators[0], first)) return p;
  for (long k = 1; k <= 3; ++k) {
    std::vector<long> c(m, -k);
    do {
      long norm = 0;
      for (long v : c) norm = std::max(norm, std::labs(v));
      if (norm != k) continue;
      NfElem x = NfElem::constant(generators[0].field(), Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        if (c[i] != 0) x = x + Rational(c[i]) * generators[i];
      }
      if (auto p = accept(x, c)) return p;
    } while (next_combination(c, k));
  }
  return std::nullopt;
}

FieldIsomorphism field_isomorphism(const SplittingField& from, const SplittingField& to) {
  if (!(from.galois.roots.poly == to.galois.roots.poly)) throw DomainError("splitting fields of different polynomials");
  if (from.degree() != to.degree()) throw TheoremError("splitting fields of different degrees");
  // V_from = sum B_i r_i = sum B_i phi_i in the target field
  NfElem theta = NfElem::constant(to.field, Rational(0));
  for (std::size_t i = 0; i < to.roots.size(); ++i) {
    theta = theta + Rational(from.galois.spec.weights[i]) * to.roots[i];
  }
  if (!eval_poly(from.galois.min_poly, theta).is_zero()) {
    throw TheoremError("image of the generator is not a root of its minimal polynomial");
  }
  FieldIsomorphism iso{theta};
  for (std::size_t i = 0; i < to.roots.size(); ++i) {
    if (!(iso.map(from.roots[i]) == to.roots[i])) {
      throw TheoremError("isomorphism does not carry root " + std::to_string(i + 1) + " to itself");
    }
  }
  return iso;
}

bool primitive_independence_check(const PermGroup& h, const SplittingField& sf, const SplittingField& sf2) {
  FieldIsomorphism iso = field_isomorphism(sf2, sf);
  std::vector<NfElem> carried;
  for (const auto& x : field_from_subgroup(h, sf2).elements()) carried.push_back(iso.map(x));
  return fields_equal(Subfield(sf.field, carried), field_from_subgroup(h, sf));
}

bool CorrespondenceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CorrespondenceReport correspondence_lattice(const SplittingField& sf) {
  CorrespondenceReport report;
  const auto subgroups = all_subgroups(sf.galois.group);
  const std::size_t d = sf.degree();

  Check equality{"fixed field equals subgroup field", true, ""};
  Check degree{"dim times order equals field degree", true, ""};
  Check averaging{"averaging witness", true, ""};
  Check primitive{"primitive element found", true, ""};
  auto fail = [](Check& c, const std::string& why) {
    if (c.pass) c.detail = why;
    c.pass = false;
  };

  for (const auto& h : subgroups) {
    SubgroupEntry e;
    e.subgroup = h;
    e.field = field_from_subgroup(h, sf);
    e.fixed = fixed_field(h, sf);
    e.equal = fields_equal(e.field, e.fixed);
    if (!e.equal) fail(equality, "subgroup " + group_label(h));
    if (e.field.dim() * h.order() != d) {
      fail(degree, "subgroup " + group_label(h) + " has dim " + std::to_string(e.field.dim()));
    }
    for (const auto& x : e.fixed.elements()) {
      NfElem avg = subgroup_average(x, h, sf);
      if (!averaging_check(x, h, sf) || !e.field.contains(avg)) {
        fail(averaging, "subgroup " + group_label(h) + ", element " + x.to_string());
      }
    }
    e.primitive = find_primitive_element(e.field, subgroup_generators(h, sf));
    if (!e.primitive) fail(primitive, "subgroup " + group_label(h));
    report.entries.push_back(std::move(e));
  }

  Check injective{"distinct subgroups give distinct fields", true, ""};
  Check reversal{"inclusion reversal", true, ""};
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    for (std::size_t j = 0; j < report.entries.size(); ++j) {
      const auto& a = report.entries[i];
      const auto& b = report.entries[j];
      if (i < j && fields_equal(a.field, b.field)) {
        fail(injective, group_label(a.subgroup) + " and " + group_label(b.subgroup));
      }
      if (i != j && a.subgroup.is_subgroup_of(b.subgroup) && !a.field.contains(b.field)) {
        fail(reversal, group_label(a.subgroup) + " inside " + group_label(b.subgroup));
      }
    }
  }

  // independent count: fixed spaces of all automorphism subsets of size <= 3
  Check surjective{"subfield count by kernels equals subgroup count", true, ""};
  {
    const auto& g = sf.galois.group.elements();
    std::vector<Matrix> mats;
    for (const auto& s : g) mats.push_back(sf.matrix(s));
    std::set<Matrix> spaces;
    spaces.insert(common_fixed_space({}, d));
    for (std::size_t a = 0; a < g.size(); ++a) {
      spaces.insert(common_fixed_space({&mats[a]}, d));
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        spaces.insert(common_fixed_space({&mats[a], &mats[b]}, d));
        for (std::size_t c = b + 1; c < g.size(); ++c) spaces.insert(common_fixed_space({&mats[a], &mats[b], &mats[c]}, d));
      }
    }
    report.subfields_by_kernels = spaces.size();
    if (spaces.size() != subgroups.size()) {
      fail(surjective, std::to_string(spaces.size()) + " subfields for " + std::to_string(subgroups.size()) +
                           " subgroups");
    }
  }

  // each subfield is recovered from the group fixing it
  Check replay{"subfield recovered from its fixing group", true, ""};
  for (const auto& e : report.entries) {
    std::vector<Permutation> fixing;
    auto basis = e.field.elements();
    for (const auto& s : sf.galois.group.elements()) {
      bool fixes = std::all_of(basis.begin(), basis.end(), [&](const NfElem& x) { return sf.apply(s, x) == x; });
      if (fixes) fixing.push_back(s);
    }
    PermGroup stab(fixing);
    if (!(stab == e.subgroup) || !fields_equal(field_from_subgroup(stab, sf), e.field)) {
      fail(replay, "subgroup " + group_label(e.subgroup));
    }
  }

  Check inverses{"closed under inverses", true, ""};
  for (const auto& e : report.entries) {
    std::vector<NfElem> samples;
    if (e.primitive) samples.push_back(e.primitive->element);
    NfElem s = NfElem::constant(sf.field, Rational(1));
    for (const auto& x : e.field.elements()) s = s + x;
    samples.push_back(s);
    for (const auto& x : samples) {
      if (x.is_zero()) continue;
      if (!e.field.contains(nf_inverse(x))) fail(inverses, "subgroup " + group_label(e.subgroup));
    }
  }

  report.checks = {equality, injective, degree, reversal, surjective, replay, averaging, inverses, primitive};
  return report;
}

}  // namespace galois
