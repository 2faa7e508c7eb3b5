#include "spinfermion/spin_to_fermion.hpp"

#include "spinfermion/errors.hpp"
#include "spinfermion/uodm.hpp"

namespace spinfermion {

namespace {

std::vector<ExactReal> real_parts(const std::vector<ExactComplex>& v, const char* what) {
    std::vector<ExactReal> out;
    out.reserve(v.size());
    for (const auto& z : v) {
        if (!z.is_real()) throw Error(std::string(what) + ": entry is not real");
        out.push_back(z.real());
    }
    return out;
}

} // namespace

OperatorExpansion spin_plus_fermionic(const SpinRep& rep) {
    const int L = rep.flavors();
    auto x = real_parts(off_diagonal_vector(spin_plus(rep), 1), "spin_plus off-diagonal");
    return expand_uodm_fermionic(UodmVector(L, std::move(x)));
}

OperatorExpansion spin_z_fermionic(const SpinRep& rep) {
    const int L = rep.flavors();
    OperatorExpansion out;
    out.basis = BasisKind::Fermionic;
    out.L_or_two_s = L;
    out.terms.push_back({ExactReal(Rational(-rep.two_s, 2)), FermionWord::identity(L)});
    Rational weight = 1;
    for (int j = 1; j <= L; ++j) {
        out.terms.push_back({ExactReal(weight),
                             FermionWord(L, {{L + 1 - j, FactorKind::Number}})});
        weight *= 2;
    }
    return out;
}

} // namespace spinfermion
