#include "galois/cli.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

namespace galois {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  UniPoly parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    UniPoly total;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail(std::string("unexpected '") + peek() + "'");
      }
      UniPoly t = term();
      total = negative ? total - t : total + t;
      first = false;
      skip_space();
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError(what + " at position " + std::to_string(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer v(text_.substr(start, pos_ - start));
    skip_space();
    return v;
  }

  UniPoly term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c(number());
      if (peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        Integer den = number();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        c = make_rational(c.get_num(), den);
      }
      if (peek() == '*') {
        ++pos_;
        skip_space();
        return c * power();
      }
      if (std::isalpha(static_cast<unsigned char>(peek()))) return c * power();
      return UniPoly::constant(c);
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) return power();
    if (pos_ == text_.size()) fail("expected a term");
    fail(std::string("unexpected '") + peek() + "'");
  }

  UniPoly power() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected the variable");
    char v = peek();
    if (var_ == '\0') {
      var_ = v;
    } else if (v != var_) {
      fail(std::string("second variable '") + v + "'");
    }
    ++pos_;
    if (std::isalpha(static_cast<unsigned char>(peek()))) fail("variable names are single letters");
    skip_space();
    unsigned long k = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t at = pos_;
      Integer e = number();
      if (e > 1000) {
        pos_ = at;
        fail("exponent too large");
      }
      k = e.get_ui();
    }
    return UniPoly::monomial(Rational(1), k);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  char var_ = '\0';
};

std::string weights_text(const std::vector<long>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w[i];
  os << ')';
  return os.str();
}

std::string coords_text(const std::vector<Rational>& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << to_string(c[i]);
  os << ']';
  return os.str();
}

std::vector<std::string> coords_strings(const std::vector<Rational>& c) {
  std::vector<std::string> out;
  for (const auto& q : c) out.push_back(to_string(q));
  return out;
}

std::vector<std::string> cycles(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& p : g.elements()) out.push_back(p.to_cycle_string());
  return out;
}

Check make_check(std::string name, bool pass, std::string detail = "") {
  return Check{std::move(name), pass, pass ? "" : std::move(detail)};
}

std::vector<SubgroupArray> build_arrays(const SplittingField& sf, const CorrespondenceReport& lattice) {
  const std::size_t n = sf.roots.size();
  std::vector<SubgroupArray> out;
  for (const auto& e : lattice.entries) {
    SubgroupArray sa{e.subgroup, {}};
    for (const auto& b : arrangement_array(sf.galois.group, e.subgroup, Arrangement::identity(n))) {
      ArrayBlock block{b.representative, {}, substitution_group(b.group())};
      for (std::size_t i = 0; i < b.rows.size(); ++i) {
        // the row lists r_{rho(1)}, ..., r_{rho(n)} with rho = sigma^-1, so V takes the value V_rho
        Permutation rho = b.row_elements[i].inverse();
        block.rows.push_back({b.rows[i], b.row_elements[i], sf.automorphism(rho).image});
      }
      sa.blocks.push_back(std::move(block));
    }
    out.push_back(std::move(sa));
  }
  return out;
}

}  // namespace

UniPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad weight '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw DomainError("bad weight '" + item + "'");
    w.push_back(v);
  }
  if (w.empty()) throw DomainError("empty weight list");
  return w;
}

bool AnalysisReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::pair<UniPoly, std::optional<std::string>> normalize_polynomial(const UniPoly& f) {
  if (f.degree() < 1) throw DomainError("polynomial must have degree >= 1");
  const Rational lead = f.leading();
  UniPoly m = f.monic();
  const auto n = static_cast<std::size_t>(m.degree());
  Integer c = 1;
  for (const auto& q : m.coeffs()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Rational> g(n + 1);
  Integer scale = 1;  // c^(n-k)
  for (std::size_t k = n + 1; k-- > 0;) {
    g[k] = m.coeff(k) * scale;
    scale *= c;
  }
  std::vector<std::string> notes;
  if (lead != 1) notes.push_back("divided by leading coefficient " + to_string(lead));
  if (c != 1) notes.push_back("x -> x/" + to_string(c) + " (roots multiplied by " + to_string(c) + ")");
  std::optional<std::string> sub;
  if (!notes.empty()) {
    sub = notes[0];
    for (std::size_t i = 1; i < notes.size(); ++i) *sub += "; " + notes[i];
  }
  return {UniPoly(std::move(g)), sub};
}

AnalysisReport analyze(const std::string& text, const AnalysisConfig& cfg) {
  if (cfg.precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  if (cfg.norm_bound < 1) throw DomainError("norm bound must be at least 1");
  AnalysisReport r;
  r.input = parse_poly(text);
  const long deg = r.input.degree();
  if (deg < 2 || deg > kMaxResolventDegree) {
    throw DomainError("degree " + (r.input.is_zero() ? std::string("-inf") : std::to_string(deg)) +
                      " is outside 2.." + std::to_string(kMaxResolventDegree));
  }
  UniPoly g = gcd(r.input, r.input.derivative());
  if (g.degree() > 0) throw DomainError("polynomial is not squarefree: gcd(f, f') = " + g.to_string());
  std::tie(r.polynomial, r.substitution) = normalize_polynomial(r.input);

  RootSystem rs = isolate_roots(r.polynomial, cfg.precision_bits);
  CertifiedSpec cs;
  if (cfg.spec) {
    auto c = certify_spec(rs, *cfg.spec);
    if (!c) throw CertificationError("weights " + weights_text(*cfg.spec) + " do not separate the conjugates");
    cs = std::move(*c);
  } else {
    cs = search_resolvent(rs, cfg.norm_bound);
  }
  GaloisData gd = identify_galois(r.polynomial, cs);
  r.field = build_splitting_field(gd);
  r.lattice = correspondence_lattice(r.field);

  const SplittingField& sf = r.field;
  r.checks.push_back(make_check("conjugate values pairwise disjoint", pairwise_disjoint(gd.conjugates)));
  r.checks.push_back(make_check("minimal polynomial divides resolvent",
                                divmod(gd.resolvent, gd.min_poly).remainder.is_zero()));
  r.checks.push_back(make_check("degree of m equals group order",
                                static_cast<std::size_t>(gd.min_poly.degree()) == gd.group.order()));
  bool roots_ok = true;
  for (const auto& phi : sf.roots) roots_ok = roots_ok && eval_poly(r.polynomial, phi).is_zero();
  r.checks.push_back(make_check("root expressions satisfy f", roots_ok));
  std::vector<Permutation> perms;
  for (const auto& a : sf.automorphisms) perms.push_back(a.root_perm);
  r.checks.push_back(make_check("automorphisms realize the group", PermGroup(perms) == gd.group));
  for (const auto& c : r.lattice.checks) r.checks.push_back(c);
  if (cfg.emit_array) r.arrays = build_arrays(sf, r.lattice);
  return r;
}

std::string render_text(const AnalysisReport& r) {
  const SplittingField& sf = r.field;
  const GaloisData& gd = sf.galois;
  std::ostringstream os;
  os << "polynomial: " << r.polynomial.to_string() << '\n';
  if (r.substitution) os << "input: " << r.input.to_string() << " (" << *r.substitution << ")\n";
  os << "resolvent weights: " << weights_text(gd.spec.weights) << '\n';
  os << "resolvent degree: " << gd.resolvent.degree() << '\n';
  os << "minimal polynomial of V: " << gd.min_poly.to_string("V") << '\n';
  os << "group order: " << gd.group.order() << '\n';
  os << "group: " << gd.group.to_string() << '\n';
  os << "roots:\n";
  for (std::size_t i = 0; i < sf.roots.size(); ++i) {
    os << "  r" << i + 1 << " = " << sf.roots[i].to_string() << "  ~ " << gd.roots.enclosures[i].to_string() << '\n';
  }
  os << "automorphisms:\n";
  for (const auto& a : sf.automorphisms) {
    os << "  " << a.sigma.to_cycle_string() << ": V -> " << a.image.to_string() << '\n';
  }
  os << "subgroups: " << r.lattice.entries.size() << '\n';
  for (std::size_t i = 0; i < r.lattice.entries.size(); ++i) {
    const auto& e = r.lattice.entries[i];
    os << "  H" << i + 1 << " order " << e.subgroup.order() << " " << e.subgroup.to_string() << '\n';
    os << "    dim " << e.field.dim() << ", fixed field equal: " << (e.equal ? "yes" : "no") << '\n';
    os << "    basis:";
    for (const auto& row : e.field.basis()) os << ' ' << coords_text(row);
    os << '\n';
    if (e.primitive) {
      os << "    primitive: " << e.primitive->element.to_string() << ", minimal polynomial "
         << e.primitive->min_poly.to_string() << '\n';
    }
  }
  os << "subfields found by kernels: " << r.lattice.subfields_by_kernels << '\n';
  for (const auto& sa : r.arrays) {
    os << "array for " << sa.subgroup.to_string() << ":\n";
    for (const auto& b : sa.blocks) {
      os << "  block " << b.representative.to_cycle_string() << ", substitutions " << b.substitutions.to_string()
         << '\n';
      for (const auto& row : b.rows) os << "    " << row.value.to_string() << " | " << row.arrangement.to_string() << '\n';
    }
  }
  os << "checks:\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string render_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  const SplittingField& sf = r.field;
  const GaloisData& gd = sf.galois;
  ordered_json j;
  j["polynomial"] = {{"input", r.input.to_string()},
                     {"analyzed", r.polynomial.to_string()},
                     {"coefficients", coords_strings(r.polynomial.coeffs())}};
  if (r.substitution) j["polynomial"]["substitution"] = *r.substitution;
  j["resolvent"] = {{"weights", gd.spec.weights},
                    {"degree", gd.resolvent.degree()},
                    {"min_poly", gd.min_poly.to_string("V")},
                    {"min_poly_coefficients", coords_strings(gd.min_poly.coeffs())}};
  ordered_json roots = ordered_json::array();
  for (std::size_t i = 0; i < sf.roots.size(); ++i) {
    roots.push_back({{"expression", sf.roots[i].to_string()},
                     {"coordinates", coords_strings(sf.roots[i].coeffs())},
                     {"enclosure", gd.roots.enclosures[i].to_string()}});
  }
  ordered_json autos = ordered_json::array();
  for (const auto& a : sf.automorphisms) {
    autos.push_back({{"element", a.sigma.to_cycle_string()}, {"image", a.image.to_string()}});
  }
  j["group"] = {{"order", gd.group.order()}, {"elements", cycles(gd.group)}, {"roots", roots}, {"automorphisms", autos}};
  ordered_json subs = ordered_json::array();
  for (const auto& e : r.lattice.entries) {
    ordered_json basis = ordered_json::array();
    for (const auto& row : e.field.basis()) basis.push_back(coords_strings(row));
    ordered_json s = {{"order", e.subgroup.order()},
                      {"elements", cycles(e.subgroup)},
                      {"dim", e.field.dim()},
                      {"basis", basis},
                      {"fixed_field_equal", e.equal}};
    if (e.primitive) {
      s["primitive"] = {{"element", e.primitive->element.to_string()},
                        {"min_poly", e.primitive->min_poly.to_string()},
                        {"min_poly_coefficients", coords_strings(e.primitive->min_poly.coeffs())}};
    }
    subs.push_back(std::move(s));
  }
  j["subgroups"] = subs;
  j["subfields_by_kernels"] = r.lattice.subfields_by_kernels;
  if (!r.arrays.empty()) {
    ordered_json arrays = ordered_json::array();
    for (const auto& sa : r.arrays) {
      ordered_json blocks = ordered_json::array();
      for (const auto& b : sa.blocks) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : b.rows) {
          rows.push_back({{"arrangement", row.arrangement.to_string()}, {"value", row.value.to_string()}});
        }
        blocks.push_back({{"representative", b.representative.to_cycle_string()},
                          {"substitutions", cycles(b.substitutions)},
                          {"rows", rows}});
      }
      arrays.push_back({{"subgroup", cycles(sa.subgroup)}, {"blocks", blocks}});
    }
    j["arrays"] = arrays;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj = {{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace galois
