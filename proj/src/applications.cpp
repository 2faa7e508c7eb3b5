#include "spinfermion/applications.hpp"

#include "spinfermion/errors.hpp"
#include "spinfermion/spin_to_fermion.hpp"


namespace spinfermion {

DiagonalHamiltonianSpec::DiagonalHamiltonianSpec(int L_, std::vector<ExactReal> energies_)
    : L(L_), energies(std::move(energies_)) {
    if (L < 1) throw IndexOutOfRange("diagonal Hamiltonian needs L >= 1");
    if (static_cast<int>(energies.size()) != L)
        throw DimensionMismatch("need one energy per flavor");
}

SpinPolynomial diagonal_hamiltonian_spin_poly(const DiagonalHamiltonianSpec& spec) {
    const SpinRep rep((1 << spec.L) - 1);
    SpinPolynomial out{rep.two_s, std::vector<ExactReal>(rep.dim)};
    for (int alpha = 1; alpha <= spec.L; ++alpha) {
        const SpinPolynomial p = number_op_polynomial(rep, alpha);
        for (int b = 0; b < rep.dim; ++b)
            out.coeffs[b] += spec.energies[alpha - 1] * p.coeffs[b];
    }
    return out;
}

Matrix precession_hamiltonian_fermionic(const FieldVector& b, const SpinRep& rep) {
    const Matrix sp = reconstruct(spin_plus_fermionic(rep));
    const Matrix sz = reconstruct(spin_z_fermionic(rep));
    const Matrix sm = dagger(sp);
    const ExactComplex zb{ExactReal(b.bx), ExactReal(b.by)};
    const ExactComplex half{Rational(1, 2)};
    return half * zb.conj() * sp + half * zb * sm + ExactComplex(ExactReal(b.bz)) * sz;
}

ExactReal rotated_field_magnitude(const FieldVector& b) {
    if (b.is_zero()) throw ZeroField();
    return ExactReal::sqrt_of(Rational(b.bx * b.bx + b.by * b.by + b.bz * b.bz));
}

bool spectrum_equal(const Matrix& h1, const Matrix& h2) {
    if (!h1.is_square() || !h2.is_square() || h1.rows() != h2.rows())
        throw DimensionMismatch("spectrum comparison needs equal square matrices");
    return char_poly(h1) == char_poly(h2);
}

OperatorExpansion multi_spin_sz(int P, int site, const SpinRep& rep) {
    if (P < 1) throw IndexOutOfRange("need at least one spin site");
    if (site < 1 || site > P) throw IndexOutOfRange("site out of 1..P");
    const int L = rep.flavors();
    const int L_total = P * L;
    const int offset = (site - 1) * L;
    OperatorExpansion out;
    out.basis = BasisKind::Fermionic;
    out.L_or_two_s = L_total;
    out.terms.push_back({ExactReal(Rational(-rep.two_s, 2)), FermionWord::identity(L_total)});
    Rational weight = 1;
    for (int j = 1; j <= L; ++j) {
        out.terms.push_back({ExactReal(weight),
                             FermionWord(L_total, {{offset + L + 1 - j, FactorKind::Number}})});
        weight *= 2;
    }
    return out;
}

OperatorExpansion ising_zz_number_ops(const SpinRep& rep) {
    const OperatorExpansion a = multi_spin_sz(2, 1, rep);
    const OperatorExpansion b = multi_spin_sz(2, 2, rep);
    OperatorExpansion out;
    out.basis = BasisKind::Fermionic;
    out.L_or_two_s = a.L_or_two_s;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            const auto& wa = std::get<FermionWord>(ta.element);
            const auto& wb = std::get<FermionWord>(tb.element);
            std::vector<WordFactor> factors = wa.factors();
            factors.insert(factors.end(), wb.factors().begin(), wb.factors().end());
            out.terms.push_back({ta.coeff * tb.coeff, FermionWord(out.L_or_two_s, std::move(factors))});
        }
    }
    return out;
}

} // namespace spinfermion
