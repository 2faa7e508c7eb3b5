#include "spinfermion/fermion_to_spin.hpp"

#include "spinfermion/errors.hpp"
#include "spinfermion/uodm.hpp"

#include <map>
#include <mutex>

namespace spinfermion {

const std::vector<SpinBasisElement>& spin_basis(const SpinRep& rep) {
    static std::map<int, std::vector<SpinBasisElement>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(rep.two_s); it != cache.end()) return it->second;
    std::vector<SpinBasisElement> basis;
    basis.reserve(rep.two_s);
    const Matrix sz = spin_z(rep);
    Matrix cur = spin_plus(rep);
    for (int alpha = 1; alpha <= rep.two_s; ++alpha) {
        basis.push_back({alpha, cur});
        if (alpha < rep.two_s) cur = cur * sz;
    }
    return cache.emplace(rep.two_s, std::move(basis)).first->second;
}

Matrix v_s(const SpinRep& rep) {
    const auto& basis = spin_basis(rep);
    const int n = rep.two_s;
    Matrix out(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out(j, k) = basis[k].matrix(j, j + 1);
    return out;
}

std::vector<int> lambda_signs(int k) {
    if (k < 0) throw IndexOutOfRange("lambda_signs needs k >= 0");
    std::vector<int> out{1};
    for (int i = 0; i < k; ++i) {
        const std::size_t half = out.size();
        out.resize(2 * half);
        for (std::size_t j = 0; j < half; ++j) out[half + j] = -out[j];
    }
    return out;
}

RootComponentVector root_component_vector(const Flavor& f) {
    const int period = 1 << (f.L - f.alpha);            // 2^{L-alpha}
    const int block_len = 2 * period - 1;               // 2^{L-alpha+1} - 1
    const auto signs = lambda_signs(f.alpha - 1);       // one sign per block
    std::vector<ExactReal> x;
    x.reserve((1 << f.L) - 1);
    for (std::size_t b = 0; b < signs.size(); ++b) {
        if (b > 0) x.emplace_back(0);
        for (int i = 1; i <= block_len; ++i)
            x.emplace_back(i % period == 0 ? signs[b] : 1);
    }
    RootComponentVector out{f.L, f.alpha, std::move(x)};
    if (!validate_root(out))
        throw RootValidationFailure("canonical root failed the power test");
    return out;
}

bool validate_root(const RootComponentVector& x) {
    if (x.alpha < 1 || x.alpha > x.L) return false;
    const Matrix m = build_uodm(UodmVector(x.L, x.x));
    return mat_pow(m, 1 << (x.L - x.alpha)) == fermion_creator({x.L, x.alpha});
}

OperatorExpansion fermion_creator_spin_expansion(const Flavor& f, const RootComponentVector& x) {
    if (x.L != f.L || x.alpha != f.alpha)
        throw RootValidationFailure("component vector does not belong to this flavor");
    if (!validate_root(x))
        throw RootValidationFailure("component vector fails the power test for c" +
                                    std::to_string(f.alpha) + "+ at L=" + std::to_string(f.L));
    const SpinRep rep((1 << f.L) - 1);
    const int n = rep.two_s;
    // (V_S)_{jk} = (S+)_{j,j+1} (S_z)_{j+1,j+1}^{k-1}, i.e. V_S factors into a
    // radical diagonal times a Vandermonde over rational nodes. Inverting the
    // factors keeps the elimination out of the radical field entirely; the
    // generic solve against v_s() stays as a test oracle.
    const Matrix sp = spin_plus(rep), sz = spin_z(rep);
    std::vector<ExactReal> nodes, scaled;
    nodes.reserve(n);
    scaled.reserve(n);
    for (int j = 0; j < n; ++j) {
        nodes.push_back(sz(j + 1, j + 1).real());
        scaled.push_back(x.x[j] * sp(j, j + 1).real().inverse());
    }
    const Matrix vinv = vandermonde_inverse(nodes);
    const auto& basis = spin_basis(rep);
    OperatorExpansion out;
    out.basis = BasisKind::Spin;
    out.L_or_two_s = rep.two_s;
    out.outer_power = 1 << (f.L - f.alpha);
    out.terms.reserve(n);
    for (int k = 0; k < n; ++k) {
        ExactReal coeff;
        for (int j = 0; j < n; ++j) {
            if (scaled[j].is_zero() || vinv(k, j).is_zero()) continue;
            coeff += vinv(k, j).real() * scaled[j];
        }
        out.terms.push_back({std::move(coeff), basis[k]});
    }
    return out;
}

ExactReal elementary_symmetric(std::span<const ExactReal> values, int k) {
    const int n = static_cast<int>(values.size());
    if (k < 0 || k > n) throw IndexOutOfRange("elementary symmetric degree out of 0..n");
    std::vector<ExactReal> e(k + 1);
    e[0] = ExactReal(1);
    for (int t = 0; t < n; ++t)
        for (int i = std::min(k, t + 1); i >= 1; --i)
            e[i] += e[i - 1] * values[t];
    return e[k];
}

ExactReal elementary_symmetric_excluding(std::span<const ExactReal> values, int k, int j) {
    const int n = static_cast<int>(values.size());
    if (j < 0 || j >= n) throw IndexOutOfRange("excluded index out of range");
    std::vector<ExactReal> rest;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i)
        if (i != j) rest.push_back(values[i]);
    return elementary_symmetric(rest, k);
}

Matrix vandermonde_inverse(std::span<const ExactReal> nodes) {
    const int n = static_cast<int>(nodes.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (nodes[a] == nodes[b]) throw RepeatedNodes();
    Matrix out(n, n);
    for (int k = 1; k <= n; ++k) {
        ExactReal denom(1);
        for (int m = 1; m <= n; ++m)
            for (int q = m + 1; q <= n; ++q)
                if (m == k || q == k) denom *= nodes[q - 1] - nodes[m - 1];
        const ExactReal inv_denom = denom.inverse();
        // one DP pass gives every S_{n-j,k} of this column at once
        std::vector<ExactReal> esp(n, ExactReal(0));
        esp[0] = ExactReal(1);
        int used = 0;
        for (int t = 0; t < n; ++t) {
            if (t == k - 1) continue;
            ++used;
            for (int i = std::min(n - 1, used); i >= 1; --i)
                esp[i] += esp[i - 1] * nodes[t];
        }
        for (int j = 1; j <= n; ++j) {
            ExactReal s = esp[n - j];
            if ((j + k) % 2 != 0) s = -s;
            out(j - 1, k - 1) = s * inv_denom;
        }
    }
    return out;
}

SpinPolynomial number_op_polynomial(const SpinRep& rep, int alpha) {
    const int L = rep.flavors();
    if (alpha < 1 || alpha > L) throw IndexOutOfRange("flavor index out of 1..L");
    return diagonal_operator_spin_poly(rep, number_operator({L, alpha}));
}

SpinPolynomial diagonal_operator_spin_poly(const SpinRep& rep, const Matrix& diag_op) {
    const int n = rep.dim;
    if (diag_op.rows() != n || diag_op.cols() != n)
        throw DimensionMismatch("diagonal operator has the wrong dimension");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !diag_op(i, j).is_zero())
                throw DimensionMismatch("operator is not diagonal");
    std::vector<ExactReal> nodes;
    nodes.reserve(n);
    for (int j = 0; j < n; ++j) nodes.emplace_back(Rational(rep.two_s - 2 * j, 2));
    const Matrix vinv = vandermonde_inverse(nodes);
    SpinPolynomial out{rep.two_s, std::vector<ExactReal>(n)};
    for (int b = 0; b < n; ++b) {
        ExactReal acc;
        for (int j = 0; j < n; ++j) {
            const ExactComplex& d = diag_op(j, j);
            if (d.is_zero()) continue;
            if (!d.is_real()) throw Error("diagonal operator has a complex entry");
            acc += vinv(b, j).real() * d.real();
        }
        out.coeffs[b] = std::move(acc);
    }
    return out;
}

Matrix eval_spin_poly(const SpinPolynomial& p, const SpinRep& rep) {
    if (p.two_s != rep.two_s)
        throw DimensionMismatch("polynomial belongs to a different representation");
    const Matrix sz = spin_z(rep);
    Matrix acc(rep.dim, rep.dim);
    Matrix power = Matrix::identity(rep.dim);
    for (std::size_t b = 0; b < p.coeffs.size(); ++b) {
        if (b > 0) power = power * sz;
        if (!p.coeffs[b].is_zero()) acc = acc + p.coeffs[b] * power;
    }
    return acc;
}

} // namespace spinfermion
