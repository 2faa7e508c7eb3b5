#ifndef SPINFERMION_TEST_SUPPORT_HPP
#define SPINFERMION_TEST_SUPPORT_HPP

#include "spinfermion/exact_complex.hpp"
#include "spinfermion/matrix.hpp"

#include <random>
#include <vector>

namespace spinfermion::test {

inline ExactReal ER(std::string_view s) { return ExactReal::parse(s); }
inline ExactComplex EC(std::string_view s) { return ExactComplex::parse(s); }

inline Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

/// Canonical element with up to `max_terms` radicand terms drawn from a small
/// squarefree pool.
inline ExactReal random_exact_real(std::mt19937_64& rng, int max_terms = 4) {
    static const int pool[] = {1, 2, 3, 5, 6, 7, 10, 15, 21, 30};
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(pool)) - 1);
    ExactReal out;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        out += ExactReal::term(random_small_rational(rng), pool[pick(rng)]);
    return out;
}

inline ExactComplex random_exact_complex(std::mt19937_64& rng, int max_terms = 2) {
    return {random_exact_real(rng, max_terms), random_exact_real(rng, max_terms)};
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int max_terms = 1) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_exact_complex(rng, max_terms);
    return m;
}

inline std::vector<ExactReal> random_rational_vector(std::mt19937_64& rng, int n) {
    std::vector<ExactReal> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.emplace_back(random_small_rational(rng));
    return out;
}

} // namespace spinfermion::test

#endif
