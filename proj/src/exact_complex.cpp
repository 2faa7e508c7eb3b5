#include "spinfermion/exact_complex.hpp"

#include "spinfermion/errors.hpp"

#include <cctype>

namespace spinfermion {

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    *this = *this * o;
    return *this;
}

ExactComplex ExactComplex::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const ExactReal n = (re_ * re_ + im_ * im_).inverse();
    return {re_ * n, -(im_ * n)};
}

std::string ExactComplex::str() const {
    return "(" + re_.str() + ", " + im_.str() + ")";
}

ExactComplex ExactComplex::parse(std::string_view text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    const auto body = text.substr(a, b - a);
    if (body.empty()) throw ParseError("empty complex scalar");
    if (body.front() != '(') return ExactComplex(ExactReal::parse(body));
    if (body.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    const auto inner = body.substr(1, body.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("expected '(re, im)' in '" + std::string(text) + "'");
    return {ExactReal::parse(inner.substr(0, comma)), ExactReal::parse(inner.substr(comma + 1))};
}

} // namespace spinfermion
