#include "spinfermion/uodm.hpp"

#include "spinfermion/errors.hpp"
#include "spinfermion/operators.hpp"

#include <map>
#include <mutex>

namespace spinfermion {

UodmVector::UodmVector(int L_, std::vector<ExactReal> x_) : L(L_), x(std::move(x_)) {
    if (L < 1) throw IndexOutOfRange("UODM vector needs L >= 1");
    if (static_cast<int>(x.size()) != (1 << L) - 1)
        throw DimensionMismatch("UODM vector must have length 2^L - 1");
}

Matrix build_uodm(const UodmVector& v) {
    const int n = 1 << v.L;
    Matrix out(n, n);
    for (int j = 0; j + 1 < n; ++j) out(j, j + 1) = v.x[j];
    return out;
}

std::vector<ExactComplex> off_diagonal_vector(const Matrix& m, int k) {
    if (!m.is_square()) throw DimensionMismatch("off-diagonal of a non-square matrix");
    if (k < 1 || k >= m.rows()) throw DimensionMismatch("off-diagonal index out of range");
    std::vector<ExactComplex> out;
    out.reserve(m.rows() - k);
    for (int j = 0; j + k < m.rows(); ++j) out.push_back(m(j, j + k));
    return out;
}

FermionWord index_shift(const FermionWord& w) {
    return w.index_shifted();
}

namespace {

std::vector<FermionWord> build_basis(int L, const std::map<int, std::vector<FermionWord>>& cache) {
    std::vector<FermionWord> basis;
    if (L == 1) {
        basis.emplace_back(1, std::vector<WordFactor>{{1, FactorKind::Creator}});
        return basis;
    }
    const auto& prev = cache.at(L - 1);
    basis.reserve((1 << L) - 1);
    for (const auto& w : prev) basis.push_back(w.shifted_with_number_prefix());
    std::vector<WordFactor> mid{{1, FactorKind::Creator}};
    for (int a = 2; a <= L; ++a) mid.push_back({a, FactorKind::Annihilator});
    basis.emplace_back(L, std::move(mid));
    for (const auto& w : prev) basis.push_back(w.index_shifted());
    return basis;
}

} // namespace

const std::vector<FermionWord>& fermionic_basis(int L) {
    if (L < 1) throw IndexOutOfRange("fermionic basis needs L >= 1");
    static std::map<int, std::vector<FermionWord>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    for (int l = 1; l <= L; ++l)
        if (!cache.count(l)) cache.emplace(l, build_basis(l, cache));
    return cache.at(L);
}

Matrix v_c_inverse(int L) {
    if (L < 1) throw IndexOutOfRange("V_c^{-1} needs L >= 1");
    if (L == 1) return Matrix::identity(1);
    const Matrix prev = v_c_inverse(L - 1);
    const auto& prev_basis = fermionic_basis(L - 1);
    const int K = 1 << (L - 1);
    Matrix out(2 * K - 1, 2 * K - 1);
    for (int j = 0; j < K - 1; ++j)
        for (int k = 0; k < K - 1; ++k) out(j, k) = prev(j, k);
    out(K - 1, K - 1) = (L - 1) % 2 == 0 ? 1 : -1;
    for (int j = 0; j < K - 1; ++j) {
        for (int k = 0; k < K - 1; ++k) {
            if (prev(j, k).is_zero()) continue;
            const int fk = prev_basis[k].f();
            const ExactComplex a = fk % 2 == 0 ? -prev(j, k) : prev(j, k);
            out(K + j, k) = a;          // (-1)^{f_k+1} (V^{-1})_{jk}
            out(K + j, K + k) = -a;     // (-1)^{f_k}   (V^{-1})_{jk}
        }
    }
    return out;
}

OperatorExpansion expand_uodm_fermionic(const UodmVector& v) {
    const auto& basis = fermionic_basis(v.L);
    const Matrix vinv = v_c_inverse(v.L);
    const int n = static_cast<int>(basis.size());
    OperatorExpansion out;
    out.basis = BasisKind::Fermionic;
    out.L_or_two_s = v.L;
    out.terms.reserve(n);
    for (int k = 0; k < n; ++k) {
        ExactReal coeff;
        for (int j = 0; j < n; ++j) {
            const ExactComplex& w = vinv(j, k);
            if (w.is_zero()) continue;
            coeff += v.x[j] * w.real(); // V_c^{-1} is a sign matrix, so real
        }
        out.terms.push_back({std::move(coeff), basis[k]});
    }
    return out;
}

std::vector<int> r_vector(int M) {
    if (M < 0) throw IndexOutOfRange("r_vector needs M >= 0");
    if (M == 0) return {};
    std::vector<int> out(2 * M - 1, 0);
    for (int i = 0; i < M - 1; ++i) {
        out[i] = 1;
        out[M + i] = -1;
    }
    return out;
}

PatternMatrix pattern_matrix(int L) {
    if (L < 2) throw IndexOutOfRange("pattern matrix needs L >= 2");
    const int n = (1 << L) - 1;
    PatternMatrix out{L, std::vector<std::vector<int>>(n, std::vector<int>(L - 1, 0))};
    for (int l = 1; l <= L - 1; ++l) {
        // 2^(l-1) copies of the block, one zero between consecutive copies
        const std::vector<int> block = r_vector(1 << (L - l));
        const int stride = static_cast<int>(block.size()) + 1;
        for (int copy = 0; copy < (1 << (l - 1)); ++copy)
            for (std::size_t i = 0; i < block.size(); ++i)
                out.rows[copy * stride + static_cast<int>(i)][l - 1] = block[i];
    }
    return out;
}

Matrix closed_form_uodm(const UodmVector& v) {
    if (v.L == 1) return build_uodm(v);
    const PatternMatrix pat = pattern_matrix(v.L);
    const int n = 1 << v.L;
    const Matrix pu = projector_up(), pd = projector_down();
    const Matrix cdag = primitive_c_dag(), cc = primitive_c();
    Matrix out(n, n);
    for (int j = 0; j < n - 1; ++j) {
        if (v.x[j].is_zero()) continue;
        Matrix pi = Matrix::identity(1);
        for (int l = 0; l < v.L - 1; ++l) {
            const int sel = pat.rows[j][l];
            if (sel == 1) pi = kron(pi, pu);
            else if (sel == -1) pi = kron(pi, pd);
        }
        Matrix term = kron(pi, cdag);
        while (term.rows() < n) term = kron(term, cc); // m_j = L-1-log2(dim Pi_j) fill factors
        out = out + v.x[j] * term;
    }
    return out;
}

} // namespace spinfermion
