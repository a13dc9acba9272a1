#pragma once

#include "rsum/rational.hpp"

#include <vector>

namespace rsum {

using Matrix = std::vector<std::vector<Rational>>;

// Upper-triangular Toeplitz matrix of size n with the given first row
// (entries beyond first_row.size() are zero).
Matrix toeplitz_matrix(const std::vector<Rational>& first_row, int n);

// Inverse of the n x n upper-triangular Toeplitz matrix, computed by back
// substitution column by column. first_row[0] must be nonzero.
Matrix toeplitz_inverse(const std::vector<Rational>& first_row, int n);

Matrix matrix_multiply(const Matrix& a, const Matrix& b);

}  // namespace rsum
