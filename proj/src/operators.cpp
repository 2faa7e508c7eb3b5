#include "spinfermion/operators.hpp"

#include "spinfermion/errors.hpp"

namespace spinfermion {

Flavor::Flavor(int L_, int alpha_) : L(L_), alpha(alpha_) {
    if (L < 1) throw IndexOutOfRange("flavor count must be >= 1");
    if (alpha < 1 || alpha > L) throw IndexOutOfRange("flavor index out of 1..L");
}

SpinRep::SpinRep(int two_s_) : two_s(two_s_), dim(two_s_ + 1) {
    if (two_s < 1) throw IncompatibleRepresentation("two_s must be >= 1");
    if (two_s % 2 == 0)
        throw IncompatibleRepresentation("only half-integer spins: two_s must be odd");
}

int SpinRep::flavors() const {
    int L = 0, d = dim;
    while (d > 1 && d % 2 == 0) { d /= 2; ++L; }
    if (d != 1)
        throw IncompatibleRepresentation("2s+1 = " + std::to_string(dim) + " is not a power of two");
    return L;
}

Matrix sigma_z() { return {{1, 0}, {0, -1}}; }
Matrix primitive_c() { return {{0, 0}, {1, 0}}; }
Matrix primitive_c_dag() { return {{0, 1}, {0, 0}}; }
Matrix projector_up() { return {{1, 0}, {0, 0}}; }
Matrix projector_down() { return {{0, 0}, {0, 1}}; }

Matrix fermion_creator(const Flavor& f) {
    Matrix out = Matrix::identity(1);
    const Matrix sz = sigma_z(), cdag = primitive_c_dag(), id = Matrix::identity(2);
    for (int k = 1; k <= f.L; ++k)
        out = kron(out, k < f.alpha ? sz : (k == f.alpha ? cdag : id));
    return out;
}

Matrix fermion_annihilator(const Flavor& f) {
    return dagger(fermion_creator(f));
}

Matrix number_operator(const Flavor& f) {
    return fermion_creator(f) * fermion_annihilator(f);
}

Matrix spin_plus(const SpinRep& rep) {
    Matrix out(rep.dim, rep.dim);
    for (int j = 1; j < rep.dim; ++j)
        out(j - 1, j) = ExactReal::sqrt_of(BigInt(j) * (rep.dim - j));
    return out;
}

Matrix spin_minus(const SpinRep& rep) {
    return dagger(spin_plus(rep));
}

Matrix spin_z(const SpinRep& rep) {
    Matrix out(rep.dim, rep.dim);
    for (int j = 0; j < rep.dim; ++j)
        out(j, j) = ExactReal(Rational(rep.two_s - 2 * j, 2));
    return out;
}

Matrix spin_x(const SpinRep& rep) {
    return ExactComplex(Rational(1, 2)) * (spin_plus(rep) + spin_minus(rep));
}

Matrix spin_y(const SpinRep& rep) {
    // S_y = (S+ - S-) / (2i) = -i/2 (S+ - S-)
    return ExactComplex(ExactReal(0), ExactReal(Rational(-1, 2))) * (spin_plus(rep) - spin_minus(rep));
}

AlgebraReport verify_car_operators(const std::vector<Matrix>& creators) {
    const int L = static_cast<int>(creators.size());
    AlgebraReport rep;
    if (L == 0) return rep;
    const int n = creators[0].rows();
    const Matrix id = Matrix::identity(n);
    const Matrix zero(n, n);
    std::vector<Matrix> ann;
    ann.reserve(creators.size());
    for (const auto& c : creators) ann.push_back(dagger(c));
    for (int a = 0; a < L; ++a) {
        for (int b = 0; b < L; ++b) {
            const Matrix mixed = anticommutator(ann[a], creators[b]);
            if (mixed != (a == b ? id : zero)) {
                rep.pass = false;
                rep.detail = "{c_" + std::to_string(a + 1) + ", c_" + std::to_string(b + 1) +
                             "^dag} != " + (a == b ? "1" : "0");
                return rep;
            }
            if (b >= a) {
                if (!anticommutator(ann[a], ann[b]).is_zero()) {
                    rep.pass = false;
                    rep.detail = "{c_" + std::to_string(a + 1) + ", c_" + std::to_string(b + 1) + "} != 0";
                    return rep;
                }
            }
        }
    }
    return rep;
}

AlgebraReport verify_car(int L) {
    std::vector<Matrix> creators;
    creators.reserve(L);
    for (int a = 1; a <= L; ++a) creators.push_back(fermion_creator({L, a}));
    return verify_car_operators(creators);
}

AlgebraReport verify_su2_operators(const Matrix& sp, const Matrix& sz) {
    AlgebraReport rep;
    const Matrix sm = dagger(sp);
    if (commutator(sz, sp) != sp) {
        rep.pass = false;
        rep.detail = "[S_z, S+] != S+";
    } else if (commutator(sz, sm) != -sm) {
        rep.pass = false;
        rep.detail = "[S_z, S-] != -S-";
    } else if (commutator(sp, sm) != ExactComplex(2) * sz) {
        rep.pass = false;
        rep.detail = "[S+, S-] != 2 S_z";
    }
    return rep;
}

AlgebraReport verify_su2(const SpinRep& rep) {
    if (spin_minus(rep) != dagger(spin_plus(rep)))
        return {false, "S+^dag != S-"};
    return verify_su2_operators(spin_plus(rep), spin_z(rep));
}

} // namespace spinfermion
