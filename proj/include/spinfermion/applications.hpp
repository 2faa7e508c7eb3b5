#ifndef SPINFERMION_APPLICATIONS_HPP
#define SPINFERMION_APPLICATIONS_HPP

#include "spinfermion/expansion.hpp"
#include "spinfermion/fermion_to_spin.hpp"
#include "spinfermion/operators.hpp"

namespace spinfermion {

/// Magnetic field components of the precession Hamiltonian.
struct FieldVector {
    Rational bx, by, bz;

    bool is_zero() const { return bx == 0 && by == 0 && bz == 0; }
};

/// H = sum_alpha E_alpha n_alpha.
struct DiagonalHamiltonianSpec {
    int L;
    std::vector<ExactReal> energies;

    DiagonalHamiltonianSpec(int L_, std::vector<ExactReal> energies_);
};

/// sum_alpha E_alpha p_alpha(S_z), summed coefficientwise; evaluation
/// reproduces the diagonal Hamiltonian exactly.
SpinPolynomial diagonal_hamiltonian_spin_poly(const DiagonalHamiltonianSpec& spec);

/// (1/2) S+ conj(z_b) + (1/2) S- z_b + b_z S_z with z_b = b_x + i b_y, built
/// entirely from the fermionic-side reconstructions; equals
/// b_x S_x + b_y S_y + b_z S_z.
Matrix precession_hamiltonian_fermionic(const FieldVector& b, const SpinRep& rep);

/// |b| = sqrt(bx^2 + by^2 + bz^2), positive root, as an exact radical.
ExactReal rotated_field_magnitude(const FieldVector& b);

/// Two Hermitian matrices share a spectrum with multiplicity iff their
/// characteristic polynomials agree coefficientwise.
bool spectrum_equal(const Matrix& h1, const Matrix& h2);

/// S_z of the given site in a P-spin system, as identity + number operators
/// at L_total = P log2(2s+1) flavors, indices shifted by (site-1) L.
OperatorExpansion multi_spin_sz(int P, int site, const SpinRep& rep);

/// S_z^(1) S_z^(2) for two spins, expanded distributively into products of
/// number operators; reconstruction equals kron(S_z, S_z).
OperatorExpansion ising_zz_number_ops(const SpinRep& rep);

} // namespace spinfermion

#endif
