#include "galois/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "galois/cli.hpp"
#include "galois/sympoly.hpp"

namespace galois {

namespace {

using Clock = std::chrono::steady_clock;

// pinned limits in seconds
constexpr double kArrayLimit = 1.0;
constexpr double kCorpusLimit = 300.0;
constexpr double kSymmetricLimit = 30.0;
constexpr double kIsolationLimit = 60.0;

constexpr int kSymmetricTrials = 200;
constexpr int kIsolationTrials = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

CriterionResult timed(int id, std::string name, double limit, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  CriterionResult r{id, std::move(name), o.pass, o.detail, 0, limit};
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0 && r.seconds > limit && r.pass) {
    r.pass = false;
    r.detail = "over the time limit";
  }
  return r;
}

PermGroup klein_four() {
  return PermGroup({Permutation::identity(4), Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1}),
                    Permutation({3, 2, 1, 0})});
}

Outcome quartic_array() {
  Outcome o;
  PermGroup a4 = alternating_group(4);
  PermGroup v4 = klein_four();
  auto blocks = arrangement_array(a4, v4, Arrangement::identity(4));
  std::vector<Arrangement> all;
  for (const auto& b : blocks) {
    if (b.rows.size() != 4) o.fail("block of size " + std::to_string(b.rows.size()));
    if (!(substitution_group(b.group()) == v4)) o.fail("block " + b.representative.to_cycle_string() + " is not Klein");
    all.insert(all.end(), b.rows.begin(), b.rows.end());
  }
  if (blocks.size() != 3) o.fail(std::to_string(blocks.size()) + " blocks");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) o.fail("repeated arrangement");
  if (all.size() != 12) o.fail(std::to_string(all.size()) + " arrangements");
  if (o.pass) o.detail = "12 arrangements in 3 blocks of 4, each with substitution group V4";
  return o;
}

std::string where(const CorpusEntry& c, const PermGroup& h) { return c.text + " H=" + h.to_string(); }

// sum of c*x^e over every distinct permutation of the exponent vector
MultiPoly symmetrize(const Exponents& e, const Rational& c) {
  Exponents f = e;
  std::sort(f.begin(), f.end());
  MultiPoly out(e.size());
  do {
    out.add_term(f, c);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

Outcome symmetric_engine() {
  Outcome o;
  {
    MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    MultiPoly e1 = elementary_symmetric(2, 1), e2 = elementary_symmetric(2, 2);
    // in elementary coordinates: E1 is exponent (1,0), E2 is (0,1)
    MultiPoly want_a(2), want_b(2);
    want_a.add_term({2, 0}, Rational(1));
    want_a.add_term({0, 1}, Rational(-2));
    want_b.add_term({2, 0}, Rational(1));
    want_b.add_term({0, 1}, Rational(-4));
    if (!(decompose(x1 * x1 + x2 * x2).poly == want_a)) o.fail("x1^2+x2^2 did not give E1^2-2E2");
    MultiPoly d = x1 - x2;
    if (!(decompose(d * d).poly == want_b)) o.fail("(x1-x2)^2 did not give E1^2-4E2");
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> nvars(1, 4), coeff(-30, 30), terms(1, 4);
  for (int trial = 0; trial < kSymmetricTrials && o.pass; ++trial) {
    auto n = static_cast<std::size_t>(nvars(rng));
    if (trial % 2 == 0) {
      // symmetric polynomial built from orbit sums of random monomials
      MultiPoly p(n);
      for (int t = terms(rng); t > 0; --t) {
        Exponents e(n, 0);
        int budget = std::uniform_int_distribution<int>(0, 8)(rng);
        for (int b = 0; b < budget; ++b) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
        p += symmetrize(e, Rational(coeff(rng)));
      }
      if (!(expand_elementary(decompose(p)) == p)) o.fail("expand(decompose(p)) != p, trial " + std::to_string(trial));
    } else {
      // random expression in E1..En of weighted degree <= 8
      MultiPoly q(n);
      for (int t = terms(rng); t > 0; --t) {
        Exponents g(n, 0);
        int weight = std::uniform_int_distribution<int>(0, 8)(rng);
        while (weight > 0) {
          auto j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
          if (static_cast<int>(j + 1) > weight) continue;
          ++g[j];
          weight -= static_cast<int>(j + 1);
        }
        q.add_term(g, Rational(coeff(rng)));
      }
      ElementarySymmetricExpression expr{q};
      if (!(decompose(expand_elementary(expr)).poly == q)) {
        o.fail("decompose(expand(q)) != q, trial " + std::to_string(trial));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(kSymmetricTrials) + " round trips and both worked examples";
  return o;
}

// exact |f(z)|^2 at the dyadic center of a ball
Rational abs2_at_center(const UniPoly& f, const ComplexBall& b) {
  const Rational x = b.re().to_rational(), y = b.im().to_rational();
  Rational re = 0, im = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    Rational nre = Rational(re * x - im * y) + f.coeff(k);
    Rational nim = Rational(re * y + im * x);
    re = nre;
    im = nim;
  }
  return Rational(re * re + im * im);
}

Rational pow_q(const Rational& q, std::size_t k) {
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= q;
  return out;
}

// exact replay of the pigeonhole certificate: |f(c)|^(1/n) <= r for each ball,
// balls pairwise disjoint, and a count of n
std::string certificate_failure(const UniPoly& f, const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(f.degree());
  if (rs.size() != n) return "ball count " + std::to_string(rs.size()) + " for degree " + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = rs.enclosures[i];
    Rational r = b.radius().to_rational();
    if (abs2_at_center(f, b) > pow_q(r, 2 * n)) return "ball " + std::to_string(i) + " fails |f(z)|^(1/n) <= r";
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = rs.enclosures[j];
      Rational dx = b.re().to_rational() - c.re().to_rational(), dy = b.im().to_rational() - c.im().to_rational();
      Rational s = r + c.radius().to_rational();
      if (Rational(dx * dx + dy * dy) <= Rational(s * s)) return "balls " + std::to_string(i) + "," + std::to_string(j) + " meet";
    }
  }
  return "";
}

Outcome root_isolation() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> degree(1, 6), small(-9, 9);
  int accepted = 0, rational_roots = 0;
  while (accepted < kIsolationTrials && o.pass) {
    const int d = degree(rng);
    const int k = std::uniform_int_distribution<int>(0, d)(rng);
    std::vector<long> known;
    UniPoly f{1};
    while (static_cast<int>(known.size()) < k) {
      long r = small(rng);
      if (std::find(known.begin(), known.end(), r) != known.end()) continue;
      known.push_back(r);
      f = f * UniPoly{-r, 1};
    }
    std::vector<Rational> co(static_cast<std::size_t>(d - k) + 1);
    for (auto& c : co) c = small(rng);
    co.back() = 1;
    f = f * UniPoly(co);
    if (gcd(f, f.derivative()).degree() > 0) continue;
    ++accepted;
    RootSystem rs = isolate_roots(f, 64);
    if (auto why = certificate_failure(f, rs); !why.empty()) {
      o.fail(f.to_string() + ": " + why);
      break;
    }
    std::vector<Rational> found;
    for (const auto& b : rs.enclosures) {
      if (auto q = reconstruct_rational(b, Integer(1))) {
        if (f.eval(*q) != 0) o.fail(f.to_string() + ": reconstructed " + to_string(*q) + " is not a root");
        found.push_back(*q);
      }
    }
    for (long r : known) {
      if (std::find(found.begin(), found.end(), Rational(r)) == found.end()) {
        o.fail(f.to_string() + ": root " + std::to_string(r) + " not recovered");
      }
    }
    rational_roots += static_cast<int>(known.size());
  }
  if (o.pass) {
    o.detail = std::to_string(accepted) + " polynomials certified, " + std::to_string(rational_roots) +
               " planted rational roots recovered";
  }
  return o;
}

}  // namespace

const std::vector<CorpusCase>& reference_corpus() {
  static const std::vector<CorpusCase> corpus = {
      {"x^2 - 2", 2}, {"x^2 + 1", 2}, {"x^3 - 2", 6}, {"x^3 - 3x - 1", 2}, {"x^4 + 1", 5}, {"x^4 - 2", 10},
  };
  return corpus;
}

CorpusEntry run_pipeline(const std::string& text, long precision_bits) {
  CorpusEntry c;
  c.text = text;
  c.f = parse_poly(text);
  c.roots = isolate_roots(c.f, precision_bits);
  GaloisData gd = identify_galois(c.f, search_resolvent(c.roots));
  c.field = build_splitting_field(gd);
  c.lattice = correspondence_lattice(c.field);
  return c;
}

std::vector<CriterionResult> AcceptanceSuite::run(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  auto emit = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  auto corpus_ready = [&](Outcome& o) {
    if (corpus_.size() != reference_corpus().size()) o.fail("corpus unavailable");
    return o.pass;
  };

  emit(timed(1, "quartic arrangement array (A4 over V4)", kArrayLimit, quartic_array));

  emit(timed(2, "subgroup field equals fixed field", kCorpusLimit, [&] {
    Outcome o;
    corpus_.clear();
    std::size_t pairs = 0;
    for (const auto& cc : reference_corpus()) {
      corpus_.push_back(run_pipeline(cc.text));
      const auto& c = corpus_.back();
      for (const auto& e : c.lattice.entries) {
        ++pairs;
        if (!fields_equal(field_from_subgroup(e.subgroup, c.field), fixed_field(e.subgroup, c.field))) {
          o.fail(where(c, e.subgroup));
        }
      }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " subgroups over " + std::to_string(corpus_.size()) + " polynomials";
    return o;
  }));

  emit(timed(3, "bijection and degree identity", 0, [&] {
    Outcome o;
    if (!corpus_ready(o)) return o;
    std::ostringstream counts;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const auto& c = corpus_[i];
      const auto& es = c.lattice.entries;
      const std::size_t want = reference_corpus()[i].subgroups;
      const std::size_t deg = c.field.degree();
      counts << (i ? ", " : "") << c.text << " " << es.size() << "/" << c.lattice.subfields_by_kernels;
      if (es.size() != want) o.fail(c.text + ": " + std::to_string(es.size()) + " subgroups");
      if (c.lattice.subfields_by_kernels != want) o.fail(c.text + ": " + std::to_string(c.lattice.subfields_by_kernels) + " subfields");
      for (std::size_t a = 0; a < es.size(); ++a) {
        if (es[a].field.dim() * es[a].subgroup.order() != deg) o.fail(where(c, es[a].subgroup) + ": dim*|H| != deg m");
        for (std::size_t b = a + 1; b < es.size(); ++b) {
          if (fields_equal(es[a].field, es[b].field)) o.fail(where(c, es[a].subgroup) + " shares its field");
        }
      }
    }
    if (o.pass) o.detail = counts.str();
    return o;
  }));

  emit(timed(4, "independence of the resolvent choice", 0, [&] {
    Outcome o;
    if (!corpus_ready(o)) return o;
    for (const auto& c : corpus_) {
      if (c.text != "x^2 - 2" && c.text != "x^3 - 2") continue;
      CertifiedSpec other = search_resolvent(c.roots, 8, 1);
      if (other.spec.weights == c.field.galois.spec.weights) o.fail(c.text + ": second spec repeats the first");
      SplittingField sf2 = build_splitting_field(identify_galois(c.f, other));
      for (const auto& e : c.lattice.entries) {
        if (!primitive_independence_check(e.subgroup, c.field, sf2)) o.fail(where(c, e.subgroup));
      }
    }
    if (o.pass) o.detail = "x^2 - 2 and x^3 - 2: every subgroup field matches across two specs";
    return o;
  }));

  emit(timed(5, "conjugate values certified distinct", 0, [&] {
    Outcome o;
    if (!corpus_ready(o)) return o;
    for (const auto& c : corpus_) {
      const GaloisData& gd = c.field.galois;
      bool balls = pairwise_disjoint(gd.conjugates);
      if (!balls) o.fail(c.text + ": conjugate balls overlap");
      if (c.f.degree() <= 3) {
        bool exact = exact_distinctness_certificate(c.f, gd.spec) != 0;
        if (exact != balls) o.fail(c.text + ": exact certificate disagrees with the balls");
      }
    }
    if (o.pass) o.detail = "balls disjoint for all 6, exact product nonzero for n <= 3";
    return o;
  }));

  emit(timed(6, "symmetric reduction round trips", kSymmetricLimit, symmetric_engine));

  emit(timed(7, "averaging witness on fixed fields", 0, [&] {
    Outcome o;
    if (!corpus_ready(o)) return o;
    std::size_t n = 0;
    for (const auto& c : corpus_) {
      for (const auto& e : c.lattice.entries) {
        for (const auto& x : e.fixed.elements()) {
          ++n;
          if (!averaging_check(x, e.subgroup, c.field)) o.fail(where(c, e.subgroup));
        }
      }
    }
    if (o.pass) o.detail = std::to_string(n) + " basis elements reproduced by their orbit averages";
    return o;
  }));

  emit(timed(8, "certified root isolation", kIsolationLimit, root_isolation));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << " s";
  if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
  os << ")";
  return os.str();
}

}  // namespace galois
