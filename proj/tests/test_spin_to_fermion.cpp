#include "spinfermion/spin_to_fermion.hpp"

#include "spinfermion/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace spinfermion;
using test::ER;

namespace {

std::vector<std::pair<std::string, ExactReal>> coeff_table(const OperatorExpansion& e) {
    std::vector<std::pair<std::string, ExactReal>> out;
    for (const auto& t : e.terms) out.emplace_back(element_str(t.element), t.coeff);
    return out;
}

} // namespace

TEST_CASE("S+ expansion for s=3/2") {
    const OperatorExpansion e = spin_plus_fermionic(SpinRep(3));
    const auto table = coeff_table(e);
    REQUIRE(table.size() == 3);
    CHECK(table[0] == std::pair<std::string, ExactReal>{"n1 c2+", ER("2*sqrt(3)")});
    CHECK(table[1] == std::pair<std::string, ExactReal>{"c1+ c2-", ExactReal(-2)});
    CHECK(table[2] == std::pair<std::string, ExactReal>{"c2+", ER("-sqrt(3)")});
    CHECK(reconstruct(e) == spin_plus(SpinRep(3)));
}

TEST_CASE("S+ expansion for s=7/2") {
    const auto table = coeff_table(spin_plus_fermionic(SpinRep(7)));
    REQUIRE(table.size() == 7);
    CHECK(table[0] == std::pair<std::string, ExactReal>{"n1 n2 c3+", ER("2*sqrt(7)+2*sqrt(15)")});
    CHECK(table[1].second.is_zero());
    CHECK(table[2].second == ER("-sqrt(7)-sqrt(15)"));
    CHECK(table[3] == std::pair<std::string, ExactReal>{"c1+ c2- c3-", ExactReal(4)});
    CHECK(table[4].second == ER("-sqrt(7)-sqrt(15)"));
    CHECK(table[5] == std::pair<std::string, ExactReal>{"c2+ c3-", ER("-2*sqrt(3)")});
    CHECK(table[6] == std::pair<std::string, ExactReal>{"c3+", ER("sqrt(7)")});
}

TEST_CASE("S_z closed form uses only identity and number operators") {
    const OperatorExpansion e = spin_z_fermionic(SpinRep(3));
    const auto table = coeff_table(e);
    REQUIRE(table.size() == 3);
    CHECK(table[0] == std::pair<std::string, ExactReal>{"1", ER("-3/2")});
    CHECK(table[1] == std::pair<std::string, ExactReal>{"n2", ExactReal(1)});
    CHECK(table[2] == std::pair<std::string, ExactReal>{"n1", ExactReal(2)});
    CHECK(reconstruct(e) == spin_z(SpinRep(3)));

    const auto half = coeff_table(spin_z_fermionic(SpinRep(1)));
    REQUIRE(half.size() == 2);
    CHECK(half[0] == std::pair<std::string, ExactReal>{"1", ER("-1/2")});
    CHECK(half[1] == std::pair<std::string, ExactReal>{"n1", ExactReal(1)});

    // binary-representation oracle: S_z + s = diag(2s, 2s-1, ..., 0)
    const SpinRep rep(7);
    const Matrix recon = reconstruct(spin_z_fermionic(rep));
    for (int j = 0; j < rep.dim; ++j)
        CHECK(recon(j, j) == ExactComplex(Rational(rep.two_s - j) - Rational(rep.two_s, 2)));
    const auto t7 = coeff_table(spin_z_fermionic(rep));
    CHECK(t7[1] == std::pair<std::string, ExactReal>{"n3", ExactReal(1)});
    CHECK(t7[2] == std::pair<std::string, ExactReal>{"n2", ExactReal(2)});
    CHECK(t7[3] == std::pair<std::string, ExactReal>{"n1", ExactReal(4)});

    for (const auto& term : spin_z_fermionic(SpinRep(15)).terms)
        for (const auto& factor : std::get<FermionWord>(term.element).factors())
            CHECK(factor.kind == FactorKind::Number); // never off-diagonal words
}

TEST_CASE("reconstruct") {
    CHECK(reconstruct(OperatorExpansion{BasisKind::Fermionic, 2, 1, {}}).is_zero());
    CHECK(reconstruct(spin_z_fermionic(SpinRep(7))) == spin_z(SpinRep(7)));
}

TEST_CASE("round trips and the algebra-map property") {
    for (const int two_s : {3, 7, 15, 31}) {
        const SpinRep rep(two_s);
        const Matrix sp = reconstruct(spin_plus_fermionic(rep));
        const Matrix sz = reconstruct(spin_z_fermionic(rep));
        CHECK(sp == spin_plus(rep));
        CHECK(sz == spin_z(rep));
        CHECK(commutator(sz, sp) == sp); // [S_z, S+] = S+ inside the representation
    }
}

TEST_CASE("incompatible representations are rejected") {
    CHECK_THROWS_AS(spin_plus_fermionic(SpinRep(5)), IncompatibleRepresentation);
    CHECK_THROWS_AS(spin_z_fermionic(SpinRep(9)), IncompatibleRepresentation);
}
