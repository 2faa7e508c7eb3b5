#include "spinfermion/expansion.hpp"

#include "spinfermion/errors.hpp"

namespace spinfermion {

std::string SpinBasisElement::str() const {
    if (alpha == 1) return "S+";
    if (alpha == 2) return "S+ Sz";
    return "S+ Sz^" + std::to_string(alpha - 1);
}

const Matrix& element_matrix(const ExpansionElement& e) {
    if (const auto* w = std::get_if<FermionWord>(&e)) return w->matrix();
    return std::get<SpinBasisElement>(e).matrix;
}

std::string element_str(const ExpansionElement& e) {
    if (const auto* w = std::get_if<FermionWord>(&e)) return w->str();
    return std::get<SpinBasisElement>(e).str();
}

Matrix reconstruct(const OperatorExpansion& e) {
    Matrix acc(e.dim(), e.dim());
    for (const auto& term : e.terms) {
        const Matrix& m = element_matrix(term.element);
        if (m.rows() != acc.rows() || m.cols() != acc.cols())
            throw DimensionMismatch("expansion element dimension disagrees with metadata");
        acc = acc + term.coeff * m;
    }
    return mat_pow(acc, e.outer_power);
}

} // namespace spinfermion
