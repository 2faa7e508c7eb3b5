#ifndef SPINFERMION_FERMION_WORD_HPP
#define SPINFERMION_FERMION_WORD_HPP

#include "spinfermion/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinfermion {

enum class FactorKind { Creator, Annihilator, Number };

struct WordFactor {
    int alpha;
    FactorKind kind;

    bool operator==(const WordFactor&) const = default;
};

/// An ordered product of creation/annihilation/number factors at L flavors.
/// f counts elementary c/c^dag factors (a number factor counts as 2 -- its
/// parity drives the index-shift sign), and the realizing matrix is cached.
class FermionWord {
public:
    /// Builds the word and its matrix as the left-to-right factor product.
    FermionWord(int L, std::vector<WordFactor> factors);

    static FermionWord identity(int L) { return {L, {}}; }

    int L() const { return L_; }
    int f() const { return f_; }
    const std::vector<WordFactor>& factors() const { return factors_; }
    const Matrix& matrix() const { return matrix_; }

    /// Every flavor index and L increment by one; the matrix picks up a left
    /// Kronecker factor sigma_z^{f mod 2}.
    FermionWord index_shifted() const;
    /// n_1 * index_shifted(), the ascending branch of the basis recursion.
    FermionWord shifted_with_number_prefix() const;

    /// Word grammar: "n<k>" | "c<k>+" | "c<k>-", space separated, product
    /// order left to right; the empty product is "1".
    std::string str() const;
    static FermionWord parse(int L, std::string_view text);

    bool operator==(const FermionWord& o) const {
        return L_ == o.L_ && factors_ == o.factors_;
    }

private:
    FermionWord() = default;

    std::vector<WordFactor> factors_;
    int L_ = 0;
    int f_ = 0;
    Matrix matrix_;
};

} // namespace spinfermion

#endif
