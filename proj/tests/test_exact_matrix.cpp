#include "spinfermion/matrix.hpp"

#include "spinfermion/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace spinfermion;
using test::ER;

namespace {

const Matrix kC{{0, 0}, {1, 0}};
const Matrix kCdag{{0, 1}, {0, 0}};
const Matrix kSigmaZ{{1, 0}, {0, -1}};
const Matrix kI2 = Matrix::identity(2);

// Random integer matrix with det +-1: start from I, apply integer row adds
// and swaps.
Matrix random_unimodular(std::mt19937_64& rng, int n) {
    Matrix t = Matrix::identity(n);
    std::uniform_int_distribution<int> row(0, n - 1), coef(-3, 3), op(0, 3);
    for (int step = 0; step < 4 * n; ++step) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        if (op(rng) == 0) {
            for (int k = 0; k < n; ++k) std::swap(t(i, k), t(j, k));
        } else {
            const ExactComplex c(coef(rng));
            for (int k = 0; k < n; ++k) t(i, k) += c * t(j, k);
        }
    }
    return t;
}

} // namespace

TEST_CASE("kron basics and the L=2 fermion blocks") {
    CHECK(kron(kI2, kI2) == Matrix::identity(4));

    // sigma_z (x) c^dag: +1 at (1,2), -1 at (3,4) in 1-based slots
    const Matrix c2dag = kron(kSigmaZ, kCdag);
    Matrix expect(4, 4);
    expect(0, 1) = 1;
    expect(2, 3) = -1;
    CHECK(c2dag == expect);

    // c^dag (x) 1: +1 at (1,3) and (2,4)
    const Matrix c1dag = kron(kCdag, kI2);
    Matrix expect1(4, 4);
    expect1(0, 2) = 1;
    expect1(1, 3) = 1;
    CHECK(c1dag == expect1);
}

TEST_CASE("matmul, add, scale, dagger") {
    CHECK(dagger(kC) == kCdag);
    std::mt19937_64 rng(11);
    const Matrix a = test::random_matrix(rng, 3, 3);
    CHECK(a * Matrix::identity(3) == a);
    CHECK((a + ExactComplex(-1) * a).is_zero());
    CHECK_THROWS_AS(a * Matrix(4, 4), DimensionMismatch);
}

TEST_CASE("anticommutators and commutators") {
    CHECK(anticommutator(kC, kCdag) == kI2);
    const Matrix c1 = kron(kC, kI2), c2dag = kron(kSigmaZ, kCdag);
    CHECK(anticommutator(c1, c2dag).is_zero()); // delta_{12} = 0
    std::mt19937_64 rng(12);
    const Matrix a = test::random_matrix(rng, 4, 4);
    CHECK(commutator(a, a).is_zero());
}

TEST_CASE("matrix powers") {
    std::mt19937_64 rng(13);
    const Matrix a = test::random_matrix(rng, 3, 3);
    CHECK(mat_pow(a, 0) == Matrix::identity(3));

    Matrix uodm(4, 4);
    uodm(0, 1) = 1;
    uodm(1, 2) = 1;
    uodm(2, 3) = 1;
    CHECK(mat_pow(uodm, 2) == kron(kCdag, kI2)); // the squared root of c1^dag at L=2
    CHECK(mat_pow(uodm, 4).is_zero());           // nilpotency
}

TEST_CASE("rank by exact elimination") {
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix(3, 5)) == 0);
    std::mt19937_64 rng(14);
    const Matrix a = test::random_matrix(rng, 4, 2), b = test::random_matrix(rng, 2, 4);
    CHECK(rank(a * b) <= 2); // product through rank-2 bottleneck
    Matrix two_rows(2, 3);
    two_rows(0, 0) = ER("sqrt(2)");
    two_rows(0, 1) = 1;
    two_rows(1, 0) = 2;
    two_rows(1, 1) = ER("sqrt(2)"); // second row = sqrt(2) * first
    CHECK(rank(two_rows) == 1);
}

TEST_CASE("characteristic polynomial, lowest degree first") {
    // diag(3/2, 1/2, -1/2, -3/2): (x^2-9/4)(x^2-1/4) = x^4 - 5/2 x^2 + 9/16
    Matrix sz(4, 4);
    sz(0, 0) = ER("3/2");
    sz(1, 1) = ER("1/2");
    sz(2, 2) = ER("-1/2");
    sz(3, 3) = ER("-3/2");
    const PolyCoeffs p = char_poly(sz);
    const PolyCoeffs want{{ER("9/16"), ExactReal(0), ER("-5/2"), ExactReal(0), ExactReal(1)}};
    CHECK(p == want);
    for (int i = 0; i < 4; ++i) CHECK(p.eval(sz(i, i)).is_zero());

    CHECK(char_poly(Matrix(2, 2)) == PolyCoeffs{{0, 0, 1}});

    // same spectrum as the fermionic form -3/2 + n_2 + 2 n_1
    const Matrix n1 = kron(Matrix{{1, 0}, {0, 0}}, kI2);
    const Matrix n2 = kron(kI2, Matrix{{1, 0}, {0, 0}});
    const Matrix fermionic = ExactComplex(ER("-3/2")) * Matrix::identity(4) + n2 + ExactComplex(2) * n1;
    CHECK(char_poly(sz) == char_poly(fermionic));
}

TEST_CASE("char_poly is a similarity invariant") {
    std::mt19937_64 rng(15);
    for (int n = 2; n <= 6; ++n) {
        const Matrix a = test::random_matrix(rng, n, n);
        const Matrix t = random_unimodular(rng, n);
        const Matrix conjugated = solve(t, a * t); // T^{-1} A T
        CHECK(char_poly(conjugated) == char_poly(a));
    }
}

TEST_CASE("exact solve") {
    std::mt19937_64 rng(16);
    const Matrix b = test::random_matrix(rng, 3, 2);
    CHECK(solve(Matrix::identity(3), b) == b);

    const Matrix vct{{1, 0, 1}, {0, -1, 0}, {0, 0, -1}};
    CHECK(solve(vct, vct) == Matrix::identity(3));

    // Vandermonde at nodes (3/2, 1/2, -1/2, -3/2) applied to diag(n_2) = (1,0,1,0)
    Matrix vand(4, 4);
    const ExactReal nodes[] = {ER("3/2"), ER("1/2"), ER("-1/2"), ER("-3/2")};
    for (int i = 0; i < 4; ++i) {
        ExactReal p(1);
        for (int j = 0; j < 4; ++j) {
            vand(i, j) = p;
            p *= nodes[i];
        }
    }
    Matrix rhs(4, 1);
    rhs(0, 0) = 1;
    rhs(2, 0) = 1;
    const Matrix y = solve(vand, rhs);
    CHECK(y(0, 0) == ExactComplex(ER("1/2")));
    CHECK(y(1, 0) == ExactComplex(ER("-7/6")));
    CHECK(y(2, 0) == ExactComplex(0));
    CHECK(y(3, 0) == ExactComplex(ER("2/3")));

    Matrix singular(2, 2);
    singular(0, 0) = 1;
    singular(1, 0) = 1;
    CHECK_THROWS_AS(solve(singular, Matrix::identity(2)), SingularMatrix);
}

TEST_CASE("algebraic properties on random matrices") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        const Matrix a = test::random_matrix(rng, 2, 3), b = test::random_matrix(rng, 2, 2);
        const Matrix c = test::random_matrix(rng, 3, 2), d = test::random_matrix(rng, 2, 3);
        // mixed product: kron(A,B) kron(C,D) = kron(AC, BD)
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(kron(a, b), d) == kron(a, kron(b, d))); // associativity
        CHECK(dagger(a * c) == dagger(c) * dagger(a));
    }
    int solved = 0;
    for (int iter = 0; iter < 12; ++iter) {
        const Matrix a = test::random_matrix(rng, 4, 4);
        const Matrix b = test::random_matrix(rng, 4, 3);
        try {
            const Matrix x = solve(a, b);
            CHECK(a * x == b); // no tolerance
            ++solved;
        } catch (const SingularMatrix&) {
            // singular draws carry no solve-roundtrip obligation
        }
    }
    CHECK(solved >= 8);
}
