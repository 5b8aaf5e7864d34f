#include "galois/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace galois {

namespace {

std::vector<Rational> reduce(const UniPoly& p, const NumberField& k) {
  UniPoly r = p.degree() >= static_cast<long>(k.degree()) ? divmod(p, k.modulus()).remainder : p;
  std::vector<Rational> c(k.degree(), Rational(0));
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return c;
}

long ball_prec(const RootSystem& rs) { return rs.precision_bits + 128; }

// Solves a x = b for each right-hand side by Gaussian elimination on balls.
// Throws CertificationError if no pivot is certified nonzero.
std::vector<std::vector<ComplexBall>> ball_solve(std::vector<std::vector<ComplexBall>> a,
                                                 std::vector<std::vector<ComplexBall>> rhs, long prec) {
  const std::size_t n = a.size();
  auto magnitude = [](const ComplexBall& z) {
    double re = z.re().to_double(), im = z.im().to_double();
    return re * re + im * im;
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (magnitude(a[r][col]) > magnitude(a[p][col])) p = r;
    std::swap(a[p], a[col]);
    for (auto& b : rhs) std::swap(b[p], b[col]);
    ComplexBall inv_pivot = inv(a[col][col], prec);
    for (std::size_t r = col + 1; r < n; ++r) {
      ComplexBall factor = mul(a[r][col], inv_pivot, prec);
      for (std::size_t j = col; j < n; ++j) a[r][j] = sub(a[r][j], mul(factor, a[col][j], prec), prec);
      for (auto& b : rhs) b[r] = sub(b[r], mul(factor, b[col], prec), prec);
    }
  }
  std::vector<std::vector<ComplexBall>> out;
  for (auto& b : rhs) {
    std::vector<ComplexBall> x(n);
    for (std::size_t i = n; i-- > 0;) {
      ComplexBall s = b[i];
      for (std::size_t j = i + 1; j < n; ++j) s = sub(s, mul(a[i][j], x[j], prec), prec);
      x[i] = div(s, a[i][i], prec);
    }
    out.push_back(std::move(x));
  }
  return out;
}

// True if `value` meets ball `own` and is disjoint from every other ball.
bool lands_only_in(const ComplexBall& value, const std::vector<ComplexBall>& balls, std::size_t own) {
  for (std::size_t j = 0; j < balls.size(); ++j) {
    bool apart = ball_disjoint(value, balls[j]);
    if (j == own ? apart : !apart) return false;
  }
  return true;
}

std::optional<std::vector<NfElem>> try_express(const GaloisData& gd, const FieldPtr& field, const Integer& disc,
                                               const RootSystem& rs) {
  const std::size_t n = rs.size();
  const std::size_t d = field->degree();
  const long prec = ball_prec(rs);
  std::vector<ComplexBall> conj = conjugate_values(rs, gd.spec.weights);
  const auto& group = gd.group.elements();
  std::vector<std::vector<ComplexBall>> vander(d, std::vector<ComplexBall>(d));
  for (std::size_t r = 0; r < d; ++r) {
    ComplexBall v = conj[gd.conjugate_index(group[r])];
    ComplexBall p = ComplexBall::exact(1);
    for (std::size_t j = 0; j < d; ++j) {
      vander[r][j] = p;
      p = mul(p, v, prec);
    }
  }
  // sigma(phi_i(V)) = phi_i(V_sigma) = r_sigma(i)
  std::vector<std::vector<ComplexBall>> rhs(n, std::vector<ComplexBall>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r) rhs[i][r] = rs.enclosures[static_cast<std::size_t>(group[r](i))];
  std::vector<std::vector<ComplexBall>> sol;
  try {
    sol = ball_solve(std::move(vander), std::move(rhs), prec);
  } catch (const CertificationError&) {
    return std::nullopt;
  }
  std::vector<NfElem> roots;
  const ComplexBall& v = conj[gd.conjugate_index(Permutation::identity(n))];
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < d; ++j) {
      auto scaled = reconstruct_rational(mul(sol[i][j], disc, prec), Integer(1));
      if (!scaled) return std::nullopt;
      c.push_back(Rational(*scaled / disc));
    }
    NfElem phi(field, std::move(c));
    if (!eval_poly(rs.poly, phi).is_zero()) return std::nullopt;
    if (!lands_only_in(phi.eval(v, prec), rs.enclosures, i)) return std::nullopt;
    roots.push_back(std::move(phi));
  }
  return roots;
}

}  // namespace

NumberField::NumberField(UniPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || !modulus_.is_monic()) throw DomainError("field modulus must be monic of degree >= 1");
}

NfElem::NfElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw DomainError("field element without a field");
  if (coeffs_.size() != field_->degree()) throw DomainError("coordinate count does not match the field degree");
}

NfElem NfElem::from_poly(FieldPtr field, const UniPoly& p) {
  auto c = reduce(p, *field);
  return NfElem(std::move(field), std::move(c));
}

NfElem NfElem::constant(FieldPtr field, const Rational& c) {
  std::vector<Rational> v(field->degree(), Rational(0));
  v[0] = c;
  return NfElem(std::move(field), std::move(v));
}

NfElem NfElem::generator(FieldPtr field) { return from_poly(field, UniPoly::x()); }

bool NfElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool NfElem::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void NfElem::check_same_field(const NfElem& other) const {
  if (!field_ || !other.field_ || !(field_->modulus() == other.field_->modulus())) {
    throw DomainError("field elements from different fields");
  }
}

NfElem operator+(const NfElem& a, const NfElem& b) {
  a.check_same_field(b);
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return NfElem(a.field_, std::move(c));
}

NfElem operator-(const NfElem& a, const NfElem& b) {
  a.check_same_field(b);
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return NfElem(a.field_, std::move(c));
}

NfElem operator-(const NfElem& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
  return NfElem(a.field_, std::move(c));
}

NfElem operator*(const NfElem& a, const NfElem& b) {
  a.check_same_field(b);
  return NfElem::from_poly(a.field_, a.to_poly() * b.to_poly());
}

NfElem operator*(const Rational& c, const NfElem& a) {
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return NfElem(a.field_, std::move(v));
}

bool operator==(const NfElem& a, const NfElem& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

NfElem NfElem::pow(unsigned k) const {
  NfElem result = constant(field_, Rational(1));
  NfElem base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

ComplexBall NfElem::eval(const ComplexBall& v, long prec) const { return to_poly().eval(v, prec); }

std::string NfElem::to_string(const std::string& var) const {
  UniPoly p = to_poly();
  return p.is_zero() ? "0" : p.to_string(var);
}

NfElem nf_inverse(const NfElem& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  ExtendedGcd g = extended_gcd(a.to_poly(), a.field()->modulus());
  if (g.gcd.degree() != 0) throw DomainError("element shares a factor with the modulus: " + g.gcd.to_string());
  // s a + t m = gcd, a nonzero constant
  return (1 / g.gcd.leading()) * NfElem::from_poly(a.field(), g.s);
}

NfElem eval_poly(const UniPoly& p, const NfElem& x) {
  NfElem acc = NfElem::constant(x.field(), Rational(0));
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + NfElem::constant(x.field(), p.coeffs()[k]);
  return acc;
}

NfElem compose(const NfElem& a, const NfElem& psi) { return eval_poly(a.to_poly(), psi); }

Matrix multiplication_matrix(const NfElem& a) {
  const std::size_t d = a.field()->degree();
  Matrix m = zero_matrix(d, d);
  NfElem v = NfElem::generator(a.field());
  NfElem col = a;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
    col = col * v;
  }
  return m;
}

Rational norm(const NfElem& a) { return determinant(multiplication_matrix(a)); }

Rational discriminant(const UniPoly& m) {
  auto field = std::make_shared<const NumberField>(m);
  const long d = m.degree();
  Rational n = norm(NfElem::from_poly(field, m.derivative()));
  return (d * (d - 1) / 2) % 2 ? Rational(-n) : n;
}

const Automorphism& SplittingField::automorphism(const Permutation& sigma) const {
  for (const auto& a : automorphisms) {
    if (a.sigma == sigma) return a;
  }
  throw DomainError("permutation " + sigma.to_cycle_string() + " is not in the Galois group");
}

NfElem SplittingField::apply(const Permutation& sigma, const NfElem& a) const {
  return compose(a, automorphism(sigma).image);
}

Matrix SplittingField::matrix(const Permutation& sigma) const {
  const std::size_t d = degree();
  Matrix m = zero_matrix(d, d);
  const NfElem& psi = automorphism(sigma).image;
  NfElem col = NfElem::constant(field, Rational(1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
    col = col * psi;
  }
  return m;
}

std::vector<NfElem> express_roots(const GaloisData& gd, const RootSystem& rs) {
  auto field = std::make_shared<const NumberField>(gd.min_poly);
  Rational disc = discriminant(gd.min_poly);
  if (disc == 0) throw CertificationError("minimal polynomial has a repeated root");
  Integer disc_int = disc.get_num();
  PrecisionLadder ladder(rs);
  for (std::size_t level = 0;; ++level) {
    const RootSystem* r = ladder.at(level);
    if (!r) break;
    if (auto roots = try_express(gd, field, disc_int, *r)) return std::move(*roots);
  }
  throw CertificationError("roots of " + rs.poly.to_string() + " not expressed in V within " +
                           std::to_string(kMaxPrecisionBits) + " bits");
}

SplittingField automorphism_table(const GaloisData& gd, std::vector<NfElem> roots, const RootSystem& rs) {
  const std::size_t n = roots.size();
  if (n != rs.size() || n != gd.spec.weights.size()) throw DomainError("root expressions do not match the root system");
  SplittingField sf;
  sf.galois = gd;
  sf.field = roots.front().field();
  sf.roots = std::move(roots);
  PrecisionLadder ladder(rs);
  std::size_t level = 0;
  for (const auto& sigma : gd.group.elements()) {
    NfElem psi = NfElem::constant(sf.field, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      psi = psi + Rational(gd.spec.weights[i]) * sf.roots[static_cast<std::size_t>(sigma(i))];
    }
    if (!eval_poly(gd.min_poly, psi).is_zero()) {
      throw TheoremError("psi for " + sigma.to_cycle_string() + " is not a root of the minimal polynomial");
    }
    // psi(V) must land in the ball of V_sigma and no other conjugate in the group
    bool located = false;
    while (!located) {
      const RootSystem* r = ladder.at(level);
      if (!r) throw CertificationError("image of V under " + sigma.to_cycle_string() + " not located");
      const long prec = ball_prec(*r);
      auto conj = conjugate_values(*r, gd.spec.weights);
      std::vector<ComplexBall> group_balls;
      std::size_t own = 0;
      for (const auto& tau : gd.group.elements()) {
        if (tau == sigma) own = group_balls.size();
        group_balls.push_back(conj[gd.conjugate_index(tau)]);
      }
      const ComplexBall& v = conj[gd.conjugate_index(Permutation::identity(n))];
      located = lands_only_in(psi.eval(v, prec), group_balls, own);
      if (!located) ++level;
    }
    std::vector<int> images(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      NfElem moved = compose(sf.roots[i], psi);
      for (std::size_t j = 0; j < n; ++j) {
        if (moved == sf.roots[j]) images[i] = static_cast<int>(j);
      }
      if (images[i] < 0) throw TheoremError("automorphism does not permute the roots");
    }
    Permutation perm(images);
    if (!(perm == sigma)) {
      throw TheoremError("automorphism for " + sigma.to_cycle_string() + " induces " + perm.to_cycle_string());
    }
    sf.automorphisms.push_back({sigma, std::move(psi), std::move(perm)});
  }
  return sf;
}

SplittingField build_splitting_field(const GaloisData& gd) {
  return automorphism_table(gd, express_roots(gd, gd.roots), gd.roots);
}

}  // namespace galois
