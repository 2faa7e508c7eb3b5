#ifndef SPINFERMION_EXPANSION_HPP
#define SPINFERMION_EXPANSION_HPP

#include "spinfermion/fermion_word.hpp"
#include "spinfermion/operators.hpp"

#include <variant>
#include <vector>

namespace spinfermion {

/// E^(S)_alpha = S+ S_z^(alpha-1), a first-upper-off-diagonal matrix.
struct SpinBasisElement {
    int alpha;
    Matrix matrix;

    /// "S+", "S+ Sz", "S+ Sz^2", ...
    std::string str() const;
};

using ExpansionElement = std::variant<FermionWord, SpinBasisElement>;

struct ExpansionTerm {
    ExactReal coeff;
    ExpansionElement element;
};

enum class BasisKind { Fermionic, Spin };

/// A linear combination of basis operators, optionally raised to an outer
/// power: target = (sum coeff * element)^outer_power.
struct OperatorExpansion {
    BasisKind basis = BasisKind::Fermionic;
    int L_or_two_s = 1; // L for fermionic terms, two_s for spin terms
    int outer_power = 1;
    std::vector<ExpansionTerm> terms;

    int dim() const {
        return basis == BasisKind::Fermionic ? 1 << L_or_two_s : L_or_two_s + 1;
    }
};

const Matrix& element_matrix(const ExpansionElement& e);
std::string element_str(const ExpansionElement& e);

/// (Sum of coeff * element matrices)^outer_power, exact.
Matrix reconstruct(const OperatorExpansion& e);

} // namespace spinfermion

#endif
