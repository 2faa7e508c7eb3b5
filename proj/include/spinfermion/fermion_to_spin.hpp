#ifndef SPINFERMION_FERMION_TO_SPIN_HPP
#define SPINFERMION_FERMION_TO_SPIN_HPP

#include "spinfermion/expansion.hpp"
#include "spinfermion/operators.hpp"

#include <span>
#include <vector>

namespace spinfermion {

/// The 2s spin basis elements E^(S)_alpha = S+ S_z^(alpha-1). Memoized per
/// representation; safe for concurrent readers.
const std::vector<SpinBasisElement>& spin_basis(const SpinRep& rep);

/// (V_S)_{jk} = (E^(S)_k)_{j,j+1}, a 2s x 2s nonsingular matrix (a scaled
/// Vandermonde in disguise).
Matrix v_s(const SpinRep& rep);

/// k-fold iterate of a -> (a, -a) starting from (1); the diagonal of
/// sigma_z^{(x)k}.
std::vector<int> lambda_signs(int k);

/// Off-diagonal entries of a UODM M with M^{2^{L-alpha}} = c_alpha^dag.
struct RootComponentVector {
    int L;
    int alpha;
    std::vector<ExactReal> x;
};

/// Canonical root choice: 2^(alpha-1) blocks of length 2^(L-alpha+1)-1
/// separated by single zeros; block k carries lambda_signs(alpha-1)[k] at
/// positions that are multiples of 2^(L-alpha) and 1 elsewhere. Roots are
/// only fixed up to block signs, so this may differ from other valid
/// choices; validity is asserted after construction.
RootComponentVector root_component_vector(const Flavor& f);

/// mat_pow(build_uodm(x), 2^{L-alpha}) == fermion_creator, exactly.
bool validate_root(const RootComponentVector& x);

/// c_alpha^dag = (sum_k coeff_k E^(S)_k)^{2^{L-alpha}}; coefficients from the
/// exact solve V_S xt = x. Throws RootValidationFailure on an invalid root.
OperatorExpansion fermion_creator_spin_expansion(const Flavor& f, const RootComponentVector& x);

/// Elementary symmetric polynomial S_k; S_0 = 1.
ExactReal elementary_symmetric(std::span<const ExactReal> values, int k);
/// S_{k,j}: the same with the j-th value removed (0-based j).
ExactReal elementary_symmetric_excluding(std::span<const ExactReal> values, int k, int j);

/// Exact inverse of the Vandermonde matrix with rows (v_j^0, v_j^1, ...),
/// by the explicit cofactor formula
/// (V^{-1})_{jk} = (-1)^{j+k} S_{N-j,k} / prod_{m<n, m=k or n=k} (v_n - v_m).
Matrix vandermonde_inverse(std::span<const ExactReal> nodes);

/// Polynomial in S_z: coefficient of S_z^(beta-1) at slot beta.
struct SpinPolynomial {
    int two_s;
    std::vector<ExactReal> coeffs;
};

/// n_alpha as a polynomial in S_z via the Vandermonde inverse applied to the
/// 0/1 diagonal of the number operator.
SpinPolynomial number_op_polynomial(const SpinRep& rep, int alpha);

/// Any diagonal operator with real entries at dim = 2s+1 as a polynomial in
/// S_z (covers products of number operators, e.g. the Ising terms).
SpinPolynomial diagonal_operator_spin_poly(const SpinRep& rep, const Matrix& diag_op);

Matrix eval_spin_poly(const SpinPolynomial& p, const SpinRep& rep);

} // namespace spinfermion

#endif
