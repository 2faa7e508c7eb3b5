#include "spinfermion/matrix.hpp"

#include "spinfermion/errors.hpp"

#include <utility>

namespace spinfermion {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

} // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    e_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<ExactComplex>> rows)
    : Matrix(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    int i = 0;
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == cols_, "ragged initializer");
        int j = 0;
        for (const auto& v : row) (*this)(i, j++) = v;
        ++i;
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shapes differ");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sub: shapes differ");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix operator-(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const ExactComplex& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(const ExactComplex& s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    if (s.is_zero()) return out;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) out(i, j) = s * a(i, j);
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix conj(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
    return out;
}

Matrix dagger(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero())
                        out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return out;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "anticommutator: need equal square matrices");
    return a * b + b * a;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "commutator: need equal square matrices");
    return a * b - b * a;
}

Matrix mat_pow(const Matrix& a, int k) {
    require(a.is_square(), "mat_pow: matrix must be square");
    if (k < 0) throw IndexOutOfRange("mat_pow: negative power");
    Matrix out = Matrix::identity(a.rows());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

ExactComplex trace(const Matrix& a) {
    require(a.is_square(), "trace: matrix must be square");
    ExactComplex t;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

int rank(const Matrix& a) {
    Matrix m = a;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        const ExactComplex inv = m(r, col).inverse();
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const ExactComplex factor = m(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

ExactComplex PolyCoeffs::eval(const ExactComplex& x) const {
    ExactComplex acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyCoeffs char_poly(const Matrix& a) {
    require(a.is_square(), "char_poly: matrix must be square");
    const int n = a.rows();
    PolyCoeffs p;
    p.coeffs.assign(n + 1, ExactComplex());
    p.coeffs[n] = 1;
    if (n == 0) return p;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    Matrix m = a;
    p.coeffs[n - 1] = -trace(m);
    for (int k = 2; k <= n; ++k) {
        Matrix shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) += p.coeffs[n - k + 1];
        m = a * shifted;
        p.coeffs[n - k] = -(trace(m) * ExactComplex(Rational(1, k)));
    }
    return p;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    require(a.is_square(), "solve: matrix must be square");
    require(a.rows() == b.rows(), "solve: right-hand side has wrong height");
    const int n = a.rows(), w = b.cols();
    Matrix m = a, x = b;
    // Gauss-Jordan with first-nonzero pivoting; exact over the field.
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            for (int j = 0; j < w; ++j) std::swap(x(col, j), x(pivot, j));
        }
        const ExactComplex inv = m(col, col).inverse();
        for (int j = col; j < n; ++j) m(col, j) = inv * m(col, j);
        for (int j = 0; j < w; ++j) x(col, j) = inv * x(col, j);
        for (int i = 0; i < n; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            const ExactComplex factor = m(i, col);
            for (int j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
            for (int j = 0; j < w; ++j) x(i, j) -= factor * x(col, j);
        }
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    return solve(a, Matrix::identity(a.rows()));
}

} // namespace spinfermion
