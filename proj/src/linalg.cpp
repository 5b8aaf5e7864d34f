#include "galois/linalg.hpp"

namespace galois {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols, Rational(0))); }

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw DomainError("matrix shapes do not match");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw DomainError("matrix shapes do not match");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

Echelon rref(Matrix a) {
  Echelon out;
  if (a.empty()) return out;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= factor * a[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rows.size(); }

Matrix kernel(const Matrix& a, std::size_t cols) {
  Echelon e = rref(a);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis)).rows;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col].size() != n) throw DomainError("determinant of a non-square matrix");
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return det;
}

Vector solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("right-hand side length does not match");
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  Echelon e = rref(std::move(a));
  if (n == 0) return {};
  if (e.rows.size() != n || e.pivots.back() != n - 1) throw DomainError("singular system");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

bool in_row_space(const Echelon& e, const Vector& v) {
  Vector rest = v;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    Rational c = rest[e.pivots[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * e.rows[r][j];
  }
  for (const auto& x : rest) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace galois
