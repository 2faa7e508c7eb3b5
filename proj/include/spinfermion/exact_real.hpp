#ifndef SPINFERMION_EXACT_REAL_HPP
#define SPINFERMION_EXACT_REAL_HPP

#include "spinfermion/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace spinfermion {

/// Splits n >= 1 into n = factor^2 * core with core squarefree.
std::pair<BigInt, BigInt> normalize_radical(const BigInt& n);

/// An element of Q(sqrt(2), sqrt(3), sqrt(5), ...): a finite rational linear
/// combination of square roots of distinct squarefree positive integers.
///
/// Stored as a map radicand -> coefficient. The key 1 holds the rational
/// part, every other key is squarefree, no key maps to zero, and the empty
/// map is zero. Values are immutable after construction.
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(int n) : ExactReal(Rational(n)) {}
    ExactReal(const BigInt& n) : ExactReal(Rational(n)) {}
    ExactReal(const Rational& r);

    /// coeff * sqrt(radicand); the radicand may be non-squarefree and is normalized.
    static ExactReal term(const Rational& coeff, const BigInt& radicand);
    static ExactReal sqrt_of(const BigInt& n) { return term(1, n); }
    /// sqrt(p/q) = sqrt(p q) / q, for r >= 0.
    static ExactReal sqrt_of(const Rational& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Coefficient of sqrt(1); the whole value if is_rational().
    Rational rational_part() const;

    const std::map<BigInt, Rational>& terms() const { return terms_; }

    ExactReal operator-() const;
    ExactReal& operator+=(const ExactReal& o);
    ExactReal& operator-=(const ExactReal& o);
    ExactReal& operator*=(const ExactReal& o);

    friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
    friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
    friend ExactReal operator*(const ExactReal& a, const ExactReal& b);

    /// Exact multiplicative inverse. Throws DivisionByZero on zero.
    ExactReal inverse() const;
    friend ExactReal operator/(const ExactReal& a, const ExactReal& b) { return a * b.inverse(); }

    bool operator==(const ExactReal& o) const { return terms_ == o.terms_; }

    double to_double() const;
    /// Fixed-point decimal approximation with `digits` fractional digits,
    /// accurate to 10^(-digits).
    std::string to_decimal(int digits) const;

    /// Canonical grammar: term ("+"|"-") term ..., term := p/q | p/q*sqrt(d),
    /// radicands ascending, rational part first; zero is "0".
    std::string str() const;
    static ExactReal parse(std::string_view text);

private:
    void insert_term(const BigInt& core, const Rational& coeff);

    std::map<BigInt, Rational> terms_;
};

} // namespace spinfermion

#endif
