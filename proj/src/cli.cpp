#include "spinfermion/cli.hpp"

#include "spinfermion/applications.hpp"
#include "spinfermion/errors.hpp"
#include "spinfermion/io_json.hpp"
#include "spinfermion/spin_to_fermion.hpp"
#include "spinfermion/uodm.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace spinfermion {

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitIncompatible = 3;

int max_flavors() {
    if (const char* env = std::getenv("SPINFERMION_MAX_L")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw Error("SPINFERMION_MAX_L must be a positive integer");
    }
    return 6;
}

void check_flavor_cap(int L) {
    const int cap = max_flavors();
    if (L > cap)
        throw Error("L=" + std::to_string(L) + " exceeds SPINFERMION_MAX_L=" + std::to_string(cap));
}

void check_dim_cap(int dim) {
    const int cap = max_flavors();
    if (dim > (1 << cap))
        throw Error("dimension " + std::to_string(dim) + " exceeds 2^SPINFERMION_MAX_L=" +
                    std::to_string(1 << cap));
}

SpinRep rep_for(int two_s) {
    SpinRep rep(two_s);
    check_flavor_cap(rep.flavors());
    return rep;
}

struct Output {
    std::string format = "json";
    std::string path;

    void deliver(const std::string& text, std::ostream& out) const {
        if (path.empty()) {
            out << text << '\n';
            return;
        }
        std::ofstream file(path);
        if (!file) throw Error("cannot open output file '" + path + "'");
        file << text << '\n';
    }
};

std::string render_matrix(const Matrix& m, const std::string& format) {
    if (format == "json") return matrix_to_json(m).dump();
    std::vector<std::string> cells(static_cast<std::size_t>(m.rows()) * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto& cell = cells[static_cast<std::size_t>(i) * m.cols() + j];
            cell = scalar_str(m(i, j));
            width[j] = std::max(width[j], cell.size());
        }
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << '[';
        for (int j = 0; j < m.cols(); ++j) {
            const auto& cell = cells[static_cast<std::size_t>(i) * m.cols() + j];
            os << std::string(width[j] - cell.size(), ' ') << cell;
            os << (j + 1 == m.cols() ? "]" : "  ");
        }
        if (i + 1 < m.rows()) os << '\n';
    }
    return os.str();
}

std::string render_expansion(const OperatorExpansion& e, const std::string& format) {
    if (format == "json") return expansion_to_json(e).dump();
    std::ostringstream os;
    if (e.basis == BasisKind::Fermionic)
        os << "basis=fermionic L=" << e.L_or_two_s;
    else
        os << "basis=spin two_s=" << e.L_or_two_s << " outer_power=" << e.outer_power;
    for (const auto& t : e.terms)
        os << "\n  " << t.coeff.str() << "  *  " << element_str(t.element);
    return os.str();
}

std::string render_poly(const SpinPolynomial& p, const std::string& format) {
    if (format == "json") return spin_poly_to_json(p).dump();
    std::ostringstream os;
    os << "p(Sz) =";
    bool any = false;
    for (std::size_t b = 0; b < p.coeffs.size(); ++b) {
        const ExactReal& c = p.coeffs[b];
        if (c.is_zero()) continue;
        const bool single_negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
        std::string body = single_negative ? (-c).str() : c.str();
        if (b >= 1 && c.terms().size() > 1) body = "(" + body + ")";
        os << (any ? (single_negative ? " - " : " + ") : (single_negative ? " -" : " ")) << body;
        if (b >= 1) os << "*Sz";
        if (b >= 2) os << '^' << b;
        any = true;
    }
    if (!any) os << " 0";
    return os.str();
}

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump();
    std::ostringstream os;
    os << (report.at("status") == "pass" ? "PASS" : "FAIL");
    for (const auto& [key, value] : report.items()) {
        if (key == "status") continue;
        os << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return os.str();
}

std::vector<ExactReal> parse_components(const std::string& list) {
    std::vector<ExactReal> out;
    std::string item;
    std::istringstream is(list);
    while (std::getline(is, item, ',')) out.push_back(ExactReal::parse(item));
    if (out.empty()) throw ParseError("empty component list");
    return out;
}

Rational parse_field_part(const std::string& s) {
    return parse_rational(s);
}

// Small deterministic rationals for the closed-form sampling check.
ExactReal random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return ExactReal(Rational(num(rng), den(rng)));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spin <-> fermion operator mapping"};
    app.fallthrough();
    Output output;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("-o,--output", output.path, "Write the result to a file instead of stdout");
    app.require_subcommand(1);

    std::string result_text;
    int exit_code = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "Emit an operator matrix");
    std::string which_op;
    int opt_L = 0, opt_alpha = 1, opt_two_s = 0;
    construct->add_option("operator", which_op, "One of c, cdag, n, splus, sz")
        ->required()
        ->check(CLI::IsMember({"c", "cdag", "n", "splus", "sz"}));
    construct->add_option("--L", opt_L, "Flavor count (fermionic operators)");
    construct->add_option("--alpha", opt_alpha, "Flavor index, 1-based");
    construct->add_option("--two-s", opt_two_s, "Twice the spin (spin operators)");
    construct->callback([&] {
        Matrix m;
        if (which_op == "splus" || which_op == "sz") {
            if (opt_two_s < 1) throw CLI::ValidationError("--two-s is required for spin operators");
            const SpinRep rep(opt_two_s);
            check_dim_cap(rep.dim);
            m = which_op == "splus" ? spin_plus(rep) : spin_z(rep);
        } else {
            if (opt_L < 1) throw CLI::ValidationError("--L is required for fermionic operators");
            check_flavor_cap(opt_L);
            const Flavor f{opt_L, opt_alpha};
            m = which_op == "c"      ? fermion_annihilator(f)
                : which_op == "cdag" ? fermion_creator(f)
                                     : number_operator(f);
        }
        result_text = render_matrix(m, output.format);
    });

    // spin-to-fermion
    auto* s2f = app.add_subcommand("spin-to-fermion", "Expand a spin operator over fermionic words");
    int s2f_two_s = 0;
    std::string s2f_op = "plus";
    s2f->add_option("--two-s", s2f_two_s, "Twice the spin")->required();
    s2f->add_option("--op", s2f_op, "plus or z")->check(CLI::IsMember({"plus", "z"}));
    s2f->callback([&] {
        const SpinRep rep = rep_for(s2f_two_s);
        const OperatorExpansion e =
            s2f_op == "plus" ? spin_plus_fermionic(rep) : spin_z_fermionic(rep);
        result_text = render_expansion(e, output.format);
    });

    // fermion-to-spin
    auto* f2s = app.add_subcommand("fermion-to-spin", "Expand a fermion creator over S+ Sz^k");
    int f2s_L = 0, f2s_alpha = 0;
    std::string f2s_components;
    f2s->add_option("--L", f2s_L, "Flavor count")->required();
    f2s->add_option("--alpha", f2s_alpha, "Flavor index")->required();
    f2s->add_option("--components", f2s_components,
                    "Comma-separated root component vector (defaults to the canonical choice)");
    f2s->callback([&] {
        check_flavor_cap(f2s_L);
        const Flavor f{f2s_L, f2s_alpha};
        const RootComponentVector root =
            f2s_components.empty()
                ? root_component_vector(f)
                : RootComponentVector{f2s_L, f2s_alpha, parse_components(f2s_components)};
        result_text = render_expansion(fermion_creator_spin_expansion(f, root), output.format);
    });

    // numop-poly
    auto* npoly = app.add_subcommand("numop-poly", "Number operator as a polynomial in S_z");
    int np_two_s = 0, np_alpha = 0;
    npoly->add_option("--two-s", np_two_s, "Twice the spin")->required();
    npoly->add_option("--alpha", np_alpha, "Flavor index")->required();
    npoly->callback([&] {
        const SpinRep rep = rep_for(np_two_s);
        result_text = render_poly(number_op_polynomial(rep, np_alpha), output.format);
    });

    // ising
    auto* ising = app.add_subcommand("ising", "Two-spin S_z S_z as number operator products");
    int ising_two_s = 0;
    ising->add_option("--two-s", ising_two_s, "Twice the spin of each site")->required();
    ising->callback([&] {
        const SpinRep rep(ising_two_s);
        check_flavor_cap(2 * rep.flavors());
        result_text = render_expansion(ising_zz_number_ops(rep), output.format);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Run an exact verification");
    verify->require_subcommand(1);

    auto finish_report = [&](Json report) {
        if (report.at("status") != "pass") exit_code = kExitVerifyFail;
        result_text = render_report(report, output.format);
    };

    auto* vcar = verify->add_subcommand("car", "Canonical anticommutation relations");
    int vcar_L = 0;
    vcar->add_option("--L", vcar_L, "Flavor count")->required();
    vcar->callback([&] {
        check_flavor_cap(vcar_L);
        const AlgebraReport r = verify_car(vcar_L);
        Json report{{"check", "car"}, {"L", vcar_L}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) report["violation"] = r.detail;
        finish_report(std::move(report));
    });

    auto* vsu2 = verify->add_subcommand("su2", "Spin commutation relations");
    int vsu2_two_s = 0;
    vsu2->add_option("--two-s", vsu2_two_s, "Twice the spin")->required();
    vsu2->callback([&] {
        const SpinRep rep(vsu2_two_s); // any odd two_s; no mapping involved
        check_dim_cap(rep.dim);
        const AlgebraReport r = verify_su2(rep);
        Json report{{"check", "su2"}, {"two_s", vsu2_two_s}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) report["violation"] = r.detail;
        finish_report(std::move(report));
    });

    auto* vclosed = verify->add_subcommand("closed-form", "Closed form vs recursion vs expansion");
    int vc_L = 0, vc_samples = 50;
    std::uint64_t vc_seed = 20240915;
    vclosed->add_option("--L", vc_L, "Flavor count")->required();
    vclosed->add_option("--samples", vc_samples, "Random coefficient vectors to test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vclosed->add_option("--seed", vc_seed, "Sampling seed")->capture_default_str();
    vclosed->callback([&] {
        check_flavor_cap(vc_L);
        std::mt19937_64 rng(vc_seed);
        bool pass = true;
        std::string detail;
        for (int s = 0; s < vc_samples && pass; ++s) {
            std::vector<ExactReal> x;
            for (int j = 0; j < (1 << vc_L) - 1; ++j) x.push_back(random_rational(rng));
            const UodmVector v(vc_L, std::move(x));
            const Matrix direct = build_uodm(v);
            if (closed_form_uodm(v) != direct || reconstruct(expand_uodm_fermionic(v)) != direct) {
                pass = false;
                detail = "sample " + std::to_string(s) + " disagrees";
            }
        }
        Json report{{"check", "closed-form"}, {"L", vc_L}, {"samples", vc_samples},
                    {"status", pass ? "pass" : "fail"}};
        if (!pass) report["violation"] = detail;
        finish_report(std::move(report));
    });

    auto* vround = verify->add_subcommand("roundtrip", "Mapping round trips reproduce the operators");
    int vr_two_s = 0;
    vround->add_option("--two-s", vr_two_s, "Twice the spin")->required();
    vround->callback([&] {
        const SpinRep rep = rep_for(vr_two_s);
        const int L = rep.flavors();
        bool pass = true;
        std::string detail;
        if (reconstruct(spin_plus_fermionic(rep)) != spin_plus(rep)) {
            pass = false;
            detail = "S+ fermionic expansion does not reconstruct";
        } else if (reconstruct(spin_z_fermionic(rep)) != spin_z(rep)) {
            pass = false;
            detail = "S_z fermionic expansion does not reconstruct";
        } else {
            for (int alpha = 1; alpha <= L && pass; ++alpha) {
                if (eval_spin_poly(number_op_polynomial(rep, alpha), rep) !=
                    number_operator({L, alpha})) {
                    pass = false;
                    detail = "n_" + std::to_string(alpha) + " polynomial does not evaluate back";
                }
                const RootComponentVector root = root_component_vector({L, alpha});
                if (pass && reconstruct(fermion_creator_spin_expansion({L, alpha}, root)) !=
                                fermion_creator({L, alpha})) {
                    pass = false;
                    detail = "c" + std::to_string(alpha) + "+ spin expansion does not reconstruct";
                }
            }
        }
        Json report{{"check", "roundtrip"}, {"two_s", vr_two_s}, {"status", pass ? "pass" : "fail"}};
        if (!pass) report["violation"] = detail;
        finish_report(std::move(report));
    });

    auto* vspec = verify->add_subcommand("spectrum", "Precession Hamiltonian spectrum equality");
    int vs_two_s = 0;
    std::string vs_field = "1,2,2";
    vspec->add_option("--two-s", vs_two_s, "Twice the spin")->required();
    vspec->add_option("--field", vs_field, "bx,by,bz as rationals")->capture_default_str();
    vspec->callback([&] {
        const SpinRep rep = rep_for(vs_two_s);
        std::istringstream is(vs_field);
        std::string part;
        std::vector<Rational> parts;
        while (std::getline(is, part, ',')) parts.push_back(parse_field_part(part));
        if (parts.size() != 3) throw ParseError("--field needs bx,by,bz");
        const FieldVector b{parts[0], parts[1], parts[2]};
        const Matrix h = precession_hamiltonian_fermionic(b, rep);
        const Matrix reference = rotated_field_magnitude(b) * spin_z(rep);
        const PolyCoeffs cp = char_poly(h);
        const bool pass = spectrum_equal(h, reference);
        Json report{{"check", "spectrum"},
                    {"two_s", vs_two_s},
                    {"field", Json::array({to_string(b.bx), to_string(b.by), to_string(b.bz)})},
                    {"b_tilde", rotated_field_magnitude(b).str()},
                    {"status", pass ? "pass" : "fail"},
                    {"char_poly", char_poly_to_json(cp)}};
        finish_report(std::move(report));
    });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IncompatibleRepresentation& e) {
        err << "error: " << e.what() << '\n';
        return kExitIncompatible;
    } catch (const RootValidationFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        output.deliver(result_text, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}

} // namespace spinfermion
