#ifndef SPINFERMION_OPERATORS_HPP
#define SPINFERMION_OPERATORS_HPP

#include "spinfermion/matrix.hpp"

#include <string>
#include <vector>

namespace spinfermion {

/// One of L fermion flavors, 1-based like every index in the serialized
/// artifacts.
struct Flavor {
    int L;
    int alpha;

    Flavor(int L_, int alpha_);
};

/// Spin-s representation with s = two_s / 2 and dim = two_s + 1. Only
/// half-integer spins occur here, so two_s is odd.
struct SpinRep {
    int two_s;
    int dim;

    explicit SpinRep(int two_s_);

    /// L with 2^L = 2s + 1; throws IncompatibleRepresentation when 2s + 1
    /// is not a power of two.
    int flavors() const;
};

Matrix sigma_z();
Matrix primitive_c();
Matrix primitive_c_dag();
Matrix projector_up();
Matrix projector_down();

/// c_alpha^dag = sigma_z^{(alpha-1)} (x) c^dag (x) 1^{(L-alpha)}, 2^L dim.
Matrix fermion_creator(const Flavor& f);
Matrix fermion_annihilator(const Flavor& f);
/// n_alpha = c_alpha^dag c_alpha.
Matrix number_operator(const Flavor& f);

/// Ladder operator with (S+)_{j,j+1} = sqrt(j (2s+1-j)), j = 1..2s.
Matrix spin_plus(const SpinRep& rep);
Matrix spin_minus(const SpinRep& rep);
/// diag(s, s-1, ..., -s).
Matrix spin_z(const SpinRep& rep);
Matrix spin_x(const SpinRep& rep);
Matrix spin_y(const SpinRep& rep);

struct AlgebraReport {
    bool pass = true;
    std::string detail; // first violated relation when pass is false
};

/// Checks {c_a, c_b^dag} = delta_{ab} 1 and {c_a, c_b} = 0 for all pairs.
AlgebraReport verify_car(int L);
/// Same check against an externally supplied operator set (creators[i] is
/// flavor i+1), used for negative controls.
AlgebraReport verify_car_operators(const std::vector<Matrix>& creators);

/// Checks [S_z, S+-] = +-S+- , [S+, S-] = 2 S_z and S+^dag = S-.
AlgebraReport verify_su2(const SpinRep& rep);
AlgebraReport verify_su2_operators(const Matrix& sp, const Matrix& sz);

} // namespace spinfermion

#endif
