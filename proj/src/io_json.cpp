#include "spinfermion/io_json.hpp"

#include "spinfermion/errors.hpp"

namespace spinfermion {

std::string scalar_str(const ExactComplex& z) {
    return z.is_real() ? z.real().str() : z.str();
}

ExactComplex scalar_parse(std::string_view text) {
    return ExactComplex::parse(text);
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            entries.push_back(Json::array({m(i, j).real().str(), m(i, j).imag().str()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
    const int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("matrix entry count does not match rows*cols");
    Matrix m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj, ++idx) {
            const auto& pair = entries.at(idx);
            m(i, jj) = ExactComplex(ExactReal::parse(pair.at(0).get<std::string>()),
                                    ExactReal::parse(pair.at(1).get<std::string>()));
        }
    return m;
}

Json expansion_to_json(const OperatorExpansion& e) {
    Json out;
    if (e.basis == BasisKind::Fermionic) {
        out["L"] = e.L_or_two_s;
        out["basis"] = "fermionic";
    } else {
        out["two_s"] = e.L_or_two_s;
        out["basis"] = "spin";
        out["outer_power"] = e.outer_power;
    }
    Json terms = Json::array();
    for (const auto& t : e.terms)
        terms.push_back(Json{{"coeff", t.coeff.str()}, {"word", element_str(t.element)}});
    out["terms"] = std::move(terms);
    return out;
}

namespace {

SpinBasisElement parse_spin_word(const SpinRep& rep, const std::string& word) {
    int alpha = 0;
    if (word == "S+") alpha = 1;
    else if (word == "S+ Sz") alpha = 2;
    else if (word.rfind("S+ Sz^", 0) == 0) alpha = std::stoi(word.substr(6)) + 1;
    else throw ParseError("bad spin basis word '" + word + "'");
    const auto& basis = spin_basis(rep);
    if (alpha < 1 || alpha > static_cast<int>(basis.size()))
        throw ParseError("spin basis word out of range: '" + word + "'");
    return basis[alpha - 1];
}

} // namespace

OperatorExpansion expansion_from_json(const Json& j) {
    OperatorExpansion e;
    const std::string kind = j.at("basis").get<std::string>();
    if (kind == "fermionic") {
        e.basis = BasisKind::Fermionic;
        e.L_or_two_s = j.at("L").get<int>();
    } else if (kind == "spin") {
        e.basis = BasisKind::Spin;
        e.L_or_two_s = j.at("two_s").get<int>();
        e.outer_power = j.value("outer_power", 1);
    } else {
        throw ParseError("unknown basis kind '" + kind + "'");
    }
    for (const auto& t : j.at("terms")) {
        ExactReal coeff = ExactReal::parse(t.at("coeff").get<std::string>());
        const std::string word = t.at("word").get<std::string>();
        if (e.basis == BasisKind::Fermionic)
            e.terms.push_back({std::move(coeff), FermionWord::parse(e.L_or_two_s, word)});
        else
            e.terms.push_back({std::move(coeff), parse_spin_word(SpinRep(e.L_or_two_s), word)});
    }
    return e;
}

Json spin_poly_to_json(const SpinPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    return Json{{"two_s", p.two_s}, {"coeffs", std::move(coeffs)}};
}

SpinPolynomial spin_poly_from_json(const Json& j) {
    SpinPolynomial p{j.at("two_s").get<int>(), {}};
    for (const auto& c : j.at("coeffs")) p.coeffs.push_back(ExactReal::parse(c.get<std::string>()));
    return p;
}

Json char_poly_to_json(const PolyCoeffs& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs) out.push_back(scalar_str(c));
    return out;
}

} // namespace spinfermion
