#ifndef SPINFERMION_EXACT_COMPLEX_HPP
#define SPINFERMION_EXACT_COMPLEX_HPP

#include "spinfermion/exact_real.hpp"

namespace spinfermion {

/// Complex number with ExactReal parts; entry type of all operator matrices.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(int n) : re_(n) {}
    ExactComplex(const Rational& r) : re_(r) {}
    ExactComplex(ExactReal re) : re_(std::move(re)) {}
    ExactComplex(ExactReal re, ExactReal im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {ExactReal(0), ExactReal(1)}; }

    const ExactReal& real() const { return re_; }
    const ExactReal& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ExactComplex conj() const { return {re_, -im_}; }

    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b);

    ExactComplex inverse() const;
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) { return a * b.inverse(); }

    bool operator==(const ExactComplex& o) const { return re_ == o.re_ && im_ == o.im_; }

    /// "(re, im)"; both parts in the ExactReal grammar.
    std::string str() const;
    /// Accepts "(re, im)" or a bare real.
    static ExactComplex parse(std::string_view text);

private:
    ExactReal re_, im_;
};

} // namespace spinfermion

#endif
