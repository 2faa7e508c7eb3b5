#ifndef SPINFERMION_MATRIX_HPP
#define SPINFERMION_MATRIX_HPP

#include "spinfermion/exact_complex.hpp"

#include <initializer_list>
#include <vector>

namespace spinfermion {

/// Dense rectangular matrix over ExactComplex, row-major. All linear algebra
/// here is exact: zero tests are exact and nothing ever rounds.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<ExactComplex>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const ExactComplex& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    ExactComplex& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Matrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<ExactComplex> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const ExactComplex& s, const Matrix& a);
inline Matrix operator*(const ExactReal& s, const Matrix& a) { return ExactComplex(s) * a; }
Matrix operator-(const Matrix& a);

Matrix transpose(const Matrix& a);
Matrix conj(const Matrix& a);
/// Complex conjugate transpose.
Matrix dagger(const Matrix& a);

/// Standard Kronecker product; block (i, j) equals a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// ab + ba (square, equal dims).
Matrix anticommutator(const Matrix& a, const Matrix& b);
/// ab - ba (square, equal dims).
Matrix commutator(const Matrix& a, const Matrix& b);

/// k-fold product; k = 0 gives the identity.
Matrix mat_pow(const Matrix& a, int k);

ExactComplex trace(const Matrix& a);

/// Rank by exact Gaussian elimination.
int rank(const Matrix& a);

/// Polynomial coefficients, lowest degree first.
struct PolyCoeffs {
    std::vector<ExactComplex> coeffs;

    bool operator==(const PolyCoeffs& o) const = default;
    ExactComplex eval(const ExactComplex& x) const;
};

/// Coefficients of det(xI - A) via the Faddeev-LeVerrier recurrence.
PolyCoeffs char_poly(const Matrix& a);

/// Solves a x = b exactly for square nonsingular a; b may have many columns.
Matrix solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

} // namespace spinfermion

#endif
