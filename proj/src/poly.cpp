#include "galois/poly.hpp"

#include <algorithm>
#include <sstream>

namespace galois {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw DomainError("monic of the zero polynomial");
  Rational inv = 1 / leading();
  return inv * *this;
}

UniPoly UniPoly::scale_variable(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexBall UniPoly::eval(const ComplexBall& x, long prec) const {
  if (coeffs_.empty()) return ComplexBall::exact(0);
  ComplexBall acc = ComplexBall::from_rational(coeffs_.back(), prec);
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    acc = mul(acc, x, prec);
    if (coeffs_[k] != 0) acc = add(acc, ComplexBall::from_rational(coeffs_[k], prec), prec);
  }
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) {
      os << galois::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> r(a.coeffs());
  long db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational lead_inv = 1 / b.leading();
  for (long k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] * lead_inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    UniPoly s2 = s0 - qr.quotient * s1;
    UniPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::GradedLex) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
  }
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
  long best = UniPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

std::pair<Exponents, Rational> MultiPoly::leading(MonomialOrder order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  // std::map orders exponent vectors lexicographically, matching Lex.
  if (order == MonomialOrder::Lex) return *terms_.rbegin();
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return *best;
}

std::vector<std::pair<Exponents, Rational>> MultiPoly::sorted_terms(MonomialOrder order) const {
  std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [order](const auto& a, const auto& b) { return compare_monomials(a.first, b.first, order) > 0; });
  return v;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f.at(i), f.at(j));
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::permute_variables(const std::vector<std::size_t>& perm) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars_, 0);
    for (std::size_t k = 0; k < nvars_; ++k) f[perm.at(k)] = e[k];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  if (nvars_ != b.nvars_) throw DomainError("variable-count mismatch");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  if (nvars_ != b.nvars_) throw DomainError("variable-count mismatch");
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable-count mismatch");
  MultiPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  if (c == 0) return MultiPoly(a.nvars_);
  MultiPoly r = a;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

std::string MultiPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(MonomialOrder::GradedLex)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool need_star = false;
    if (constant || mag != 1) {
      os << galois::to_string(mag);
      need_star = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << var << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly multi_arith(const MultiPoly& a, const MultiPoly& b, MultiOp op) {
  if (a.nvars() != b.nvars()) throw DomainError("variable-count mismatch");
  return op == MultiOp::Add ? a + b : a * b;
}

}  // namespace galois
