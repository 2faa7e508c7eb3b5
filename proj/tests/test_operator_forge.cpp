#include "spinfermion/operators.hpp"

#include "spinfermion/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace spinfermion;
using test::ER;

TEST_CASE("primitive two-dimensional operators") {
    CHECK(projector_up() == Matrix{{1, 0}, {0, 0}});
    CHECK(projector_up() + projector_down() == Matrix::identity(2));
    CHECK(primitive_c_dag() == Matrix{{0, 1}, {0, 0}});
    CHECK(primitive_c() == dagger(primitive_c_dag()));
    CHECK(projector_up() == primitive_c_dag() * primitive_c());
    CHECK(projector_down() == primitive_c() * primitive_c_dag());
}

TEST_CASE("fermion creators from the Kronecker formula") {
    CHECK(fermion_creator({1, 1}) == primitive_c_dag());

    const Matrix c2dag = fermion_creator({2, 2});
    Matrix expect2(4, 4);
    expect2(0, 1) = 1;
    expect2(2, 3) = -1;
    CHECK(c2dag == expect2);
    CHECK(c2dag == kron(sigma_z(), primitive_c_dag()));

    const Matrix c1dag = fermion_creator({2, 1});
    Matrix expect1(4, 4);
    expect1(0, 2) = 1;
    expect1(1, 3) = 1;
    CHECK(c1dag == expect1);

    CHECK_THROWS_AS(Flavor(2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(Flavor(0, 1), IndexOutOfRange);
}

TEST_CASE("number operators are alternating 0/1 blocks") {
    Matrix n1(4, 4), n2(4, 4);
    n1(0, 0) = 1;
    n1(1, 1) = 1;
    n2(0, 0) = 1;
    n2(2, 2) = 1;
    CHECK(number_operator({2, 1}) == n1); // diag(1,1,0,0)
    CHECK(number_operator({2, 2}) == n2); // diag(1,0,1,0)
    for (int L = 1; L <= 6; ++L)
        for (int alpha = 1; alpha <= L; ++alpha) {
            const Matrix n = number_operator({L, alpha});
            CHECK(n * n == n); // projector
        }
}

TEST_CASE("spin operators") {
    const SpinRep s32(3);
    const Matrix sp = spin_plus(s32);
    CHECK(sp(0, 1) == ExactComplex(ER("sqrt(3)")));
    CHECK(sp(1, 2) == ExactComplex(2));
    CHECK(sp(2, 3) == ExactComplex(ER("sqrt(3)")));

    CHECK(spin_plus(SpinRep(1)) == primitive_c_dag()); // 2-dim coincidence

    const Matrix sz = spin_z(s32);
    CHECK(sz(0, 0) == ExactComplex(ER("3/2")));
    CHECK(sz(1, 1) == ExactComplex(ER("1/2")));
    CHECK(sz(2, 2) == ExactComplex(ER("-1/2")));
    CHECK(sz(3, 3) == ExactComplex(ER("-3/2")));

    CHECK(spin_x(s32) + ExactComplex::i() * spin_y(s32) == sp);
    CHECK(dagger(spin_y(s32)) == spin_y(s32)); // Hermitian
}

TEST_CASE("spin representation bookkeeping") {
    CHECK(SpinRep(3).flavors() == 2);
    CHECK(SpinRep(63).flavors() == 6);
    CHECK_THROWS_AS(SpinRep(5).flavors(), IncompatibleRepresentation); // dim 6
    CHECK_THROWS_AS(SpinRep(2), IncompatibleRepresentation);           // integer spin
    CHECK_THROWS_AS(SpinRep(0), IncompatibleRepresentation);
}

TEST_CASE("CAR verification") {
    CHECK(verify_car(1).pass);
    CHECK(verify_car(3).pass);
    CHECK(verify_car(4).pass);

    // drop the sigma_z string of flavor 2: anticommutators with flavor 1 break
    std::vector<Matrix> corrupted{fermion_creator({2, 1}), kron(Matrix::identity(2), primitive_c_dag())};
    const AlgebraReport r = verify_car_operators(corrupted);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("c_1") != std::string::npos);
    CHECK(r.detail.find("c_2") != std::string::npos);
}

TEST_CASE("su(2) verification") {
    CHECK(verify_su2(SpinRep(1)).pass);
    CHECK(verify_su2(SpinRep(3)).pass);
    CHECK(verify_su2(SpinRep(7)).pass);

    const SpinRep rep(3);
    const AlgebraReport r = verify_su2_operators(ExactComplex(2) * spin_plus(rep), spin_z(rep));
    CHECK_FALSE(r.pass);
    CHECK(r.detail == "[S+, S-] != 2 S_z");
}

TEST_CASE("tensor products rewrite as products of flavored operators") {
    // 1 (x) c (x) 1 = (2 n_1 - 1) c_2 at L = 3
    const Matrix lhs = kron(Matrix::identity(2), kron(primitive_c(), Matrix::identity(2)));
    const Matrix rhs = (ExactComplex(2) * number_operator({3, 1}) - Matrix::identity(8)) *
                       fermion_annihilator({3, 2});
    CHECK(lhs == rhs);
}

TEST_CASE("creators are nilpotent of order two") {
    for (int L = 1; L <= 6; ++L)
        for (int alpha = 1; alpha <= L; ++alpha) {
            const Matrix c = fermion_creator({L, alpha});
            CHECK((c * c).is_zero());
        }
}
