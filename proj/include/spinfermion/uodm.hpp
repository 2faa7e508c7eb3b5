#ifndef SPINFERMION_UODM_HPP
#define SPINFERMION_UODM_HPP

#include "spinfermion/expansion.hpp"
#include "spinfermion/fermion_word.hpp"

#include <vector>

namespace spinfermion {

/// Component vector of an upper off-diagonal matrix at L flavors,
/// x has length 2^L - 1.
struct UodmVector {
    int L;
    std::vector<ExactReal> x;

    UodmVector(int L_, std::vector<ExactReal> x_);
};

/// 2^L-dimensional matrix with x_j at (j, j+1), 1-based slots.
Matrix build_uodm(const UodmVector& v);

/// Entries m(j, j+k) for j = 1..dim-k.
std::vector<ExactComplex> off_diagonal_vector(const Matrix& m, int k);

/// The 2^L - 1 fermionic words spanning the UODM space, in recursion order:
/// n_1-prefixed shifts of the previous basis, the long word c1+ c2- ... cL-,
/// then the plain shifts. Memoized; safe for concurrent readers.
const std::vector<FermionWord>& fermionic_basis(int L);

FermionWord index_shift(const FermionWord& w);

/// Basis transformation inverse V_c^{-1}(L), built by the block recursion
/// with (-1)^{L-1} center and sign blocks (-1)^{f_k+1}, (-1)^{f_k}.
/// Expansion coefficients are c_k = sum_j x_j (V_c^{-1})_{jk}.
Matrix v_c_inverse(int L);

/// Expands build_uodm(v) over fermionic_basis(L), exactly.
OperatorExpansion expand_uodm_fermionic(const UodmVector& v);

/// (1,...,1, 0, -1,...,-1) with M-1 ones; r(1) = (0), r(0) = ().
std::vector<int> r_vector(int M);

/// Row j selects the projector tensor factors of the closed-form solution:
/// 1 -> P_up, 0 -> scalar 1, -1 -> P_down.
struct PatternMatrix {
    int L;
    std::vector<std::vector<int>> rows; // (2^L - 1) x (L - 1)
};

/// Column l holds 2^(l-1) copies of r_vector(2^(L-l)) separated by single
/// zeros, reproducing the recursion's block layout.
PatternMatrix pattern_matrix(int L);

/// Non-recursive evaluation: sum_j x_j Pi_j (x) c^dag (x) c^{(x) m_j} with
/// Pi_j the projector product selected by pattern row j and
/// m_j = L - 1 - log2(dim Pi_j). Equals build_uodm(v).
Matrix closed_form_uodm(const UodmVector& v);

} // namespace spinfermion

#endif
