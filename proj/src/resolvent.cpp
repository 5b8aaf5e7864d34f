#include "galois/resolvent.hpp"

#include <algorithm>
#include <sstream>

#include "galois/sympoly.hpp"

namespace galois {

namespace {

long ball_prec(const RootSystem& rs) { return rs.precision_bits + 128; }

std::string weights_string(const std::vector<long>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

bool has_repeat(std::vector<long> w) {
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) != w.end();
}

// Advances to the next vector in [0, k]^n in lexicographic order.
bool next_vector(std::vector<long>& w, long k) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < k) {
      ++w[i];
      return true;
    }
    w[i] = 0;
  }
  return false;
}

MultiPoly linear_form(const std::vector<long>& weights, const Permutation& sigma) {
  const std::size_t n = weights.size();
  MultiPoly l(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] == 0) continue;
    l += Rational(weights[i]) * MultiPoly::variable(n, static_cast<std::size_t>(sigma(i)));
  }
  return l;
}

Rational reduce_symmetric(const MultiPoly& p, std::span<const Rational> e, ElementaryPowers& powers) {
  return substitute_elementary(decompose(p, powers), e);
}

void check_resolvent_input(const UniPoly& f, const ResolventSpec& spec) {
  if (!f.is_monic()) throw DomainError("resolvent needs a monic polynomial");
  if (f.degree() < 1 || f.degree() > kMaxResolventDegree) {
    throw DomainError("resolvent degree " + std::to_string(f.degree()) + " outside 1.." +
                      std::to_string(kMaxResolventDegree));
  }
  if (spec.weights.size() != static_cast<std::size_t>(f.degree())) {
    throw DomainError("weight count does not match the degree");
  }
}

// prod (x - b) over the given balls, coefficients low to high.
std::vector<ComplexBall> ball_product(const std::vector<const ComplexBall*>& roots, long prec) {
  std::vector<ComplexBall> c{ComplexBall::exact(1)};
  for (const ComplexBall* r : roots) {
    std::vector<ComplexBall> next(c.size() + 1, ComplexBall::exact(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = add(next[k + 1], c[k], prec);
      next[k] = sub(next[k], mul(c[k], *r, prec), prec);
    }
    c = std::move(next);
  }
  return c;
}

enum class Verdict { Pass, Fail, Ambiguous };

Verdict test_subgroup(const PermGroup& g, const GaloisData& gd, UniPoly& candidate, long prec) {
  std::vector<const ComplexBall*> roots;
  for (const auto& sigma : g.elements()) roots.push_back(&gd.conjugate(sigma));
  std::vector<ComplexBall> c = ball_product(roots, prec);
  std::vector<Rational> exact;
  bool ambiguous = false;
  for (const auto& b : c) {
    Reconstruction r = classify_rational(b, Integer(1));
    if (r.status == Reconstruction::Status::Absent) return Verdict::Fail;
    if (r.status == Reconstruction::Status::Ambiguous) ambiguous = true;
    exact.push_back(r.value);
  }
  if (ambiguous) return Verdict::Ambiguous;
  candidate = UniPoly(exact);
  if (!divmod(gd.resolvent, candidate).remainder.is_zero()) return Verdict::Fail;
  // the other conjugates must be certified non-roots
  for (std::size_t i = 0; i < gd.permutations.size(); ++i) {
    if (g.contains(gd.permutations[i])) continue;
    if (candidate.eval(gd.conjugates[i], prec).contains_zero()) return Verdict::Ambiguous;
  }
  return Verdict::Pass;
}

}  // namespace

PrecisionLadder::PrecisionLadder(RootSystem base) { levels_.push_back(std::move(base)); }

const RootSystem* PrecisionLadder::at(std::size_t level) {
  while (levels_.size() <= level) {
    long next = levels_.back().precision_bits * 2;
    if (next > kMaxPrecisionBits) return nullptr;
    levels_.push_back(refine(levels_.back(), next));
  }
  return &levels_[level];
}

std::vector<ComplexBall> conjugate_values(const RootSystem& rs, const std::vector<long>& weights) {
  if (weights.size() != rs.size()) throw DomainError("weight count does not match the root count");
  const long prec = ball_prec(rs);
  std::vector<ComplexBall> out;
  for (const auto& sigma : all_permutations(rs.size())) {
    ComplexBall v = ComplexBall::exact(0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] == 0) continue;
      v = add(v, mul(rs.enclosures[static_cast<std::size_t>(sigma(i))], Integer(weights[i]), prec), prec);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool pairwise_disjoint(const std::vector<ComplexBall>& balls) {
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (!ball_disjoint(balls[i], balls[j])) return false;
  return true;
}

std::optional<CertifiedSpec> certify_spec(PrecisionLadder& ladder, const std::vector<long>& weights) {
  if (has_repeat(weights)) return std::nullopt;
  for (std::size_t level = 0;; ++level) {
    const RootSystem* rs = ladder.at(level);
    if (!rs) return std::nullopt;
    auto conj = conjugate_values(*rs, weights);
    if (pairwise_disjoint(conj)) return CertifiedSpec{ResolventSpec{weights}, *rs, std::move(conj)};
  }
}

std::optional<CertifiedSpec> certify_spec(const RootSystem& rs, const std::vector<long>& weights) {
  PrecisionLadder ladder(rs);
  return certify_spec(ladder, weights);
}

CertifiedSpec search_resolvent(const RootSystem& rs, long norm_bound, std::size_t skip) {
  if (norm_bound < 1) throw DomainError("norm bound must be at least 1");
  PrecisionLadder ladder(rs);
  const std::size_t n = rs.size();
  for (long k = 0; k <= norm_bound; ++k) {
    std::vector<long> w(n, 0);
    do {
      if (std::find(w.begin(), w.end(), k) == w.end()) continue;
      if (auto cs = certify_spec(ladder, w)) {
        if (skip == 0) return std::move(*cs);
        --skip;
      }
    } while (next_vector(w, k));
  }
  throw CertificationError("no resolvent weights of max-norm <= " + std::to_string(norm_bound) +
                           " separate the conjugates");
}

UniPoly resolvent_poly(const UniPoly& f, const ResolventSpec& spec) {
  check_resolvent_input(f, spec);
  const std::size_t n = spec.weights.size();
  // coefficient of x^k as a polynomial in the roots
  std::vector<MultiPoly> coeffs{MultiPoly::constant(n, Rational(1))};
  for (const auto& sigma : all_permutations(n)) {
    MultiPoly l = linear_form(spec.weights, sigma);
    std::vector<MultiPoly> next(coeffs.size() + 1, MultiPoly(n));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      if (!l.is_zero()) next[k] -= l * coeffs[k];
    }
    coeffs = std::move(next);
  }
  std::vector<Rational> e = elementary_values_of_roots(f);
  ElementaryPowers powers(n);
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(reduce_symmetric(c, e, powers));
  return UniPoly(std::move(out));
}

Rational exact_distinctness_certificate(const UniPoly& f, const ResolventSpec& spec) {
  check_resolvent_input(f, spec);
  const std::size_t n = spec.weights.size();
  if (n > 3) throw DomainError("exact distinctness certificate is limited to degree 3");
  std::vector<MultiPoly> forms;
  for (const auto& sigma : all_permutations(n)) forms.push_back(linear_form(spec.weights, sigma));
  MultiPoly prod = MultiPoly::constant(n, Rational(1));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      MultiPoly d = forms[i] - forms[j];
      prod = prod * d * d;
    }
  }
  std::vector<Rational> e = elementary_values_of_roots(f);
  ElementaryPowers powers(n);
  return reduce_symmetric(prod, e, powers);
}

std::size_t GaloisData::conjugate_index(const Permutation& sigma) const {
  auto it = std::lower_bound(permutations.begin(), permutations.end(), sigma);
  if (it == permutations.end() || !(*it == sigma)) throw DomainError("permutation of the wrong degree");
  return static_cast<std::size_t>(it - permutations.begin());
}

GaloisData identify_galois(const UniPoly& f, const CertifiedSpec& cs) {
  if (!f.has_integer_coeffs()) throw DomainError("Galois group identification needs integer coefficients");
  if (!(cs.roots.poly == f)) throw DomainError("root system belongs to another polynomial");
  GaloisData gd;
  gd.spec = cs.spec;
  gd.resolvent = resolvent_poly(f, cs.spec);
  gd.permutations = all_permutations(cs.spec.weights.size());
  const auto subgroups = all_subgroups(symmetric_group(cs.spec.weights.size()));
  PrecisionLadder ladder(cs.roots);
  for (std::size_t level = 0;; ++level) {
    const RootSystem* rs = ladder.at(level);
    if (!rs) break;
    gd.roots = *rs;
    gd.conjugates = level == 0 ? cs.conjugates : conjugate_values(*rs, cs.spec.weights);
    if (!pairwise_disjoint(gd.conjugates)) continue;
    gd.v_ball = gd.conjugates[0];
    const long prec = ball_prec(*rs);
    for (const auto& g : subgroups) {
      UniPoly candidate;
      Verdict v = test_subgroup(g, gd, candidate, prec);
      if (v == Verdict::Fail) continue;
      if (v == Verdict::Ambiguous) break;
      gd.group = g;
      gd.min_poly = std::move(candidate);
      return gd;
    }
  }
  throw CertificationError("no subgroup certified as Galois group for weights " + weights_string(cs.spec.weights) +
                           " within " + std::to_string(kMaxPrecisionBits) + " bits");
}

GaloisData identify_galois(const UniPoly& f, const ResolventSpec& spec, const RootSystem& rs) {
  PrecisionLadder ladder(rs);
  auto cs = certify_spec(ladder, spec.weights);
  if (!cs) throw CertificationError("weights " + weights_string(spec.weights) + " do not separate the conjugates");
  return identify_galois(f, *cs);
}

}  // namespace galois
