#include "spinfermion/exact_real.hpp"

#include "spinfermion/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace spinfermion {

BigInt pow10(int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

BigInt factorial(const BigInt& n) {
    BigInt f = 1;
    for (BigInt i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den <= 0) throw ParseError("denominator must be positive: " + std::string(text));
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + std::string(text) + "': " + e.what());
    }
}

std::pair<BigInt, BigInt> normalize_radical(const BigInt& n) {
    if (n < 1) throw IndexOutOfRange("normalize_radical needs n >= 1");
    BigInt rest = n, factor = 1, core = 1;
    for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) factor *= p;
        if (e % 2 != 0) core *= p;
    }
    core *= rest;
    return {factor, core};
}

ExactReal::ExactReal(const Rational& r) {
    if (r != 0) terms_.emplace(1, r);
}

void ExactReal::insert_term(const BigInt& core, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(core, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactReal ExactReal::term(const Rational& coeff, const BigInt& radicand) {
    ExactReal out;
    if (coeff == 0) return out;
    auto [factor, core] = normalize_radical(radicand);
    out.insert_term(core, coeff * factor);
    return out;
}

ExactReal ExactReal::sqrt_of(const Rational& r) {
    if (r < 0) throw IndexOutOfRange("sqrt of a negative rational");
    if (r == 0) return ExactReal();
    const BigInt p = numerator(r), q = denominator(r);
    return term(Rational(1, q), p * q);
}

bool ExactReal::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational ExactReal::rational_part() const {
    const auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExactReal ExactReal::operator-() const {
    ExactReal out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
    return out;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
    for (const auto& [d, c] : o.terms_) insert_term(d, c);
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
    for (const auto& [d, c] : o.terms_) insert_term(d, -c);
    return *this;
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
    ExactReal out;
    // sqrt(d1)*sqrt(d2) = g*sqrt(d1 d2 / g^2) with g = gcd(d1, d2); for
    // squarefree inputs the reduced radicand is squarefree again.
    for (const auto& [d1, c1] : a.terms_) {
        for (const auto& [d2, c2] : b.terms_) {
            const BigInt g = boost::multiprecision::gcd(d1, d2);
            out.insert_term((d1 / g) * (d2 / g), c1 * c2 * g);
        }
    }
    return out;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
    *this = *this * o;
    return *this;
}

namespace {

BigInt smallest_prime_factor(BigInt n) {
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return p;
    return n;
}

} // namespace

ExactReal ExactReal::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return ExactReal(Rational(1) / rational_part());
    // Pick a prime p from some radicand and write a = u + v*sqrt(p) with u, v
    // free of p. Then 1/a = (u - v*sqrt(p)) / (u^2 - p v^2), and the
    // denominator lives in the subfield without p, so recursion terminates.
    BigInt p = 0;
    for (const auto& [d, c] : terms_) {
        (void)c;
        if (d != 1) { p = smallest_prime_factor(d); break; }
    }
    ExactReal u, v;
    for (const auto& [d, c] : terms_) {
        if (d % p == 0) v.insert_term(d / p, c);
        else u.insert_term(d, c);
    }
    const ExactReal denom = u * u - ExactReal(Rational(p)) * v * v;
    return (u - v * term(1, p)) * denom.inverse();
}

double ExactReal::to_double() const {
    double out = 0.0;
    for (const auto& [d, c] : terms_) {
        const double q = c.convert_to<double>();
        out += q * std::sqrt(d.convert_to<double>());
    }
    return out;
}

std::string ExactReal::to_decimal(int digits) const {
    if (digits < 0) throw IndexOutOfRange("digits must be >= 0");
    const int guard = digits + 24;
    const BigInt sg = pow10(guard);
    // floor approximation of each sqrt at `guard` decimal digits; summed
    // exactly, the total error stays far below 10^(-digits)/2.
    Rational acc = 0;
    for (const auto& [d, c] : terms_) {
        if (d == 1) {
            acc += c;
        } else {
            const BigInt scaled = d * sg * sg;
            const BigInt root = boost::multiprecision::sqrt(scaled);
            acc += c * Rational(root, sg);
        }
    }
    const bool neg = acc < 0;
    if (neg) acc = -acc;
    const BigInt scale = pow10(digits);
    const BigInt scaled = numerator(acc * scale * 2 + 1) / (denominator(acc * scale * 2 + 1) * 2);
    const BigInt whole = scaled / scale, frac = scaled % scale;
    std::ostringstream os;
    if (neg && (whole != 0 || frac != 0)) os << '-';
    os << whole;
    if (digits > 0) {
        std::string f = frac.str();
        os << '.' << std::string(digits - f.size(), '0') << f;
    }
    return os.str();
}

std::string ExactReal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rational r = c;
        if (first) {
            if (r < 0) { os << '-'; r = -r; }
        } else {
            os << (r < 0 ? '-' : '+');
            if (r < 0) r = -r;
        }
        first = false;
        if (d == 1) {
            os << to_string(r);
        } else {
            if (r != 1) os << to_string(r) << '*';
            os << "sqrt(" << d << ')';
        }
    }
    return os.str();
}

namespace {

void parse_term(std::string_view t, bool negative, ExactReal& acc) {
    Rational coeff = 1;
    BigInt radicand = 1;
    const auto sq = t.find("sqrt(");
    if (sq == std::string_view::npos) {
        coeff = parse_rational(t);
    } else {
        if (t.back() != ')') throw ParseError("unterminated sqrt in '" + std::string(t) + "'");
        try {
            radicand = BigInt(std::string(t.substr(sq + 5, t.size() - sq - 6)));
        } catch (const std::runtime_error&) {
            throw ParseError("bad radicand in '" + std::string(t) + "'");
        }
        if (radicand < 1) throw ParseError("radicand must be >= 1 in '" + std::string(t) + "'");
        if (sq > 0) {
            if (t[sq - 1] != '*') throw ParseError("expected '*' before sqrt in '" + std::string(t) + "'");
            coeff = parse_rational(t.substr(0, sq - 1));
        }
    }
    if (negative) coeff = -coeff;
    acc += ExactReal::term(coeff, radicand);
}

} // namespace

ExactReal ExactReal::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty scalar");

    ExactReal out;
    std::size_t start = 0;
    bool negative = s[0] == '-';
    if (s[0] == '+' || s[0] == '-') start = 1;
    std::size_t pos = start;
    while (pos <= s.size()) {
        if (pos == s.size() || s[pos] == '+' || s[pos] == '-') {
            if (pos == start) throw ParseError("empty term in '" + std::string(text) + "'");
            parse_term(std::string_view(s).substr(start, pos - start), negative, out);
            if (pos == s.size()) break;
            negative = s[pos] == '-';
            start = pos + 1;
        }
        ++pos;
    }
    return out;
}

} // namespace spinfermion
