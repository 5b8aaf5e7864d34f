#pragma once

// Dense exact linear algebra over Q.

#include <vector>

#include "galois/arith.hpp"

namespace galois {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);

struct Echelon {
  Matrix rows;  // nonzero rows only, pivots normalized to 1, pivot columns cleared
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the result is unique for a given row space.
Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {x : a x = 0}, itself in reduced echelon form.
Matrix kernel(const Matrix& a, std::size_t cols);
Rational determinant(Matrix a);
/// The unique x with a x = b; throws DomainError if a is singular.
Vector solve(Matrix a, Vector b);
/// True if v lies in the row space of the echelon basis.
bool in_row_space(const Echelon& e, const Vector& v);

}  // namespace galois
