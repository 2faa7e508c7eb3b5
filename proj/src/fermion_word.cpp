#include "spinfermion/fermion_word.hpp"

#include "spinfermion/errors.hpp"
#include "spinfermion/operators.hpp"

#include <sstream>

namespace spinfermion {

namespace {

int factor_weight(FactorKind k) {
    return k == FactorKind::Number ? 2 : 1;
}

Matrix factor_matrix(int L, const WordFactor& w) {
    switch (w.kind) {
        case FactorKind::Creator: return fermion_creator({L, w.alpha});
        case FactorKind::Annihilator: return fermion_annihilator({L, w.alpha});
        case FactorKind::Number: return number_operator({L, w.alpha});
    }
    throw Error("unreachable factor kind");
}

} // namespace

FermionWord::FermionWord(int L, std::vector<WordFactor> factors)
    : factors_(std::move(factors)), L_(L) {
    if (L_ < 1) throw IndexOutOfRange("word needs L >= 1");
    matrix_ = Matrix::identity(1 << L_);
    for (const auto& w : factors_) {
        if (w.alpha < 1 || w.alpha > L_) throw IndexOutOfRange("word factor flavor out of range");
        f_ += factor_weight(w.kind);
        matrix_ = matrix_ * factor_matrix(L_, w);
    }
}

FermionWord FermionWord::index_shifted() const {
    FermionWord out;
    out.L_ = L_ + 1;
    out.f_ = f_;
    out.factors_.reserve(factors_.size());
    for (const auto& w : factors_) out.factors_.push_back({w.alpha + 1, w.kind});
    out.matrix_ = kron(f_ % 2 == 1 ? sigma_z() : Matrix::identity(2), matrix_);
    return out;
}

FermionWord FermionWord::shifted_with_number_prefix() const {
    FermionWord out = index_shifted();
    out.factors_.insert(out.factors_.begin(), {1, FactorKind::Number});
    out.f_ += 2;
    out.matrix_ = number_operator({out.L_, 1}) * out.matrix_;
    return out;
}

std::string FermionWord::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& w : factors_) {
        if (!first) os << ' ';
        first = false;
        switch (w.kind) {
            case FactorKind::Creator: os << 'c' << w.alpha << '+'; break;
            case FactorKind::Annihilator: os << 'c' << w.alpha << '-'; break;
            case FactorKind::Number: os << 'n' << w.alpha; break;
        }
    }
    return os.str();
}

FermionWord FermionWord::parse(int L, std::string_view text) {
    std::vector<WordFactor> factors;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2) throw ParseError("bad word token '" + tok + "'");
        FactorKind kind;
        std::string digits;
        if (tok[0] == 'n') {
            kind = FactorKind::Number;
            digits = tok.substr(1);
        } else if (tok[0] == 'c' && tok.back() == '+') {
            kind = FactorKind::Creator;
            digits = tok.substr(1, tok.size() - 2);
        } else if (tok[0] == 'c' && tok.back() == '-') {
            kind = FactorKind::Annihilator;
            digits = tok.substr(1, tok.size() - 2);
        } else {
            throw ParseError("bad word token '" + tok + "'");
        }
        try {
            factors.push_back({std::stoi(digits), kind});
        } catch (const std::exception&) {
            throw ParseError("bad flavor index in '" + tok + "'");
        }
    }
    return {L, std::move(factors)};
}

} // namespace spinfermion
