#include "rsum/toeplitz.hpp"

#include <stdexcept>

namespace rsum {

Matrix toeplitz_matrix(const std::vector<Rational>& first_row, int n) {
    if (n < 1) throw std::domain_error("toeplitz_matrix: n must be >= 1");
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::size_t k = static_cast<std::size_t>(j - i);
            if (k < first_row.size()) m[i][j] = first_row[k];
        }
    return m;
}

Matrix toeplitz_inverse(const std::vector<Rational>& first_row, int n) {
    if (n < 1) throw std::domain_error("toeplitz_inverse: n must be >= 1");
    if (first_row.empty() || first_row[0] == 0)
        throw std::domain_error("toeplitz_inverse: singular matrix (zero diagonal)");
    Matrix t = toeplitz_matrix(first_row, n);
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    // Solve T x = e_j by back substitution, one column at a time.
    for (int j = 0; j < n; ++j) {
        for (int i = j; i >= 0; --i) {
            Rational rhs = (i == j) ? Rational(1) : Rational(0);
            for (int k = i + 1; k <= j; ++k) rhs -= t[i][k] * inv[k][j];
            inv[i][j] = rhs / t[i][i];
        }
    }
    return inv;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), m = b[0].size(), p = b.size();
    Matrix r(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace rsum
