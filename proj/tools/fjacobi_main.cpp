// Command-line front end: evaluate the library's operations and run the
// verification suites, emitting one JSON (or CSV) object per command.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <iostream>

#include "fjacobi/contfrac.hpp"
#include "fjacobi/jacobi_core.hpp"
#include "fjacobi/jtable.hpp"
#include "fjacobi/linear_diag.hpp"
#include "fjacobi/special.hpp"
#include "fjacobi/verify.hpp"

using nlohmann::json;
using namespace fjacobi;

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split_list(text)) out.push_back(parse_rational(item));
    return out;
}

json complex_json(const std::complex<double>& v) {
    if (v.imag() == 0.0) return v.real();
    return json{{"re", v.real()}, {"im", v.imag()}};
}

void emit(const json& j, const std::string& format) {
    if (format == "csv") {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += it.key();
            if (it->is_string())
                row += it->get<std::string>();
            else if (it->is_array()) {
                std::string joined;
                for (const auto& e : *it) {
                    if (!joined.empty()) joined += ';';
                    joined += e.is_string() ? e.get<std::string>() : e.dump();
                }
                row += joined;
            } else {
                row += it->dump();
            }
        }
        std::cout << header << '\n' << row << '\n';
    } else {
        std::cout << j.dump() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fjacobi: finite Jacobi matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    double tol = 1e-12;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", tol, "Numeric tolerance for float-mode commands");
    app.add_option("--seed", seed, "Seed for randomized verification");

    // f-eval
    auto* feval = app.add_subcommand("f-eval", "Evaluate F on a finite sequence");
    std::string seq_text;
    bool feval_exact = true;
    feval->add_option("--seq", seq_text, "Comma-separated entries (rationals like 2/3 or decimals)");
    feval->add_flag("--exact,!--float", feval_exact, "Exact rational arithmetic (default; --float for doubles)");

    // jmatrix
    auto* jm = app.add_subcommand("jmatrix", "Entry J(m, n; w) of the antisymmetric matrix");
    long jm_m = 0, jm_n = 0;
    std::string jm_w = "1";
    std::string jm_method = "closed";
    jm->add_option("--m", jm_m)->required();
    jm->add_option("--n", jm_n)->required();
    jm->add_option("--w", jm_w, "Nonzero rational parameter")->required();
    jm->add_option("--method", jm_method)->check(CLI::IsMember({"closed", "recurrence", "f"}));

    // det
    auto* det = app.add_subcommand("det", "Determinant of diag(y) + w E+ + w E-");
    std::string det_y, det_w = "1", det_shift = "0", det_method = "formula";
    det->add_option("--y", det_y, "2d+1 diagonal entries, centered -d..d")->required();
    det->add_option("--w", det_w, "Constant off-diagonal");
    det->add_option("--shift", det_shift, "Evaluate det(J - shift I) (oracle method only)");
    det->add_option("--method", det_method)->check(CLI::IsMember({"formula", "oracle"}));

    // charpoly
    auto* cp = app.add_subcommand("charpoly", "Reduced characteristic polynomial of K(w)");
    long cp_d = 0;
    std::string cp_w = "1", cp_method = "closed";
    cp->add_option("--d", cp_d)->required()->check(CLI::NonNegativeNumber);
    cp->add_option("--w", cp_w)->required();
    cp->add_option("--method", cp_method)->check(CLI::IsMember({"closed", "antisym", "f", "oracle"}));

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "Eigenvalues and residuals of K(w), real w");
    long sp_d = 0;
    double sp_w = 1.0;
    bool sp_serial = false;
    sp->add_option("--d", sp_d)->required()->check(CLI::NonNegativeNumber);
    sp->add_option("--w", sp_w)->required();
    sp->add_flag("--serial", sp_serial, "Use the serial reference kernel");

    // resolvent
    auto* rv = app.add_subcommand("resolvent", "Resolvent of the rank-one form at z");
    long rv_d = 0;
    std::string rv_w = "1", rv_z = "1/2";
    rv->add_option("--d", rv_d)->required()->check(CLI::NonNegativeNumber);
    rv->add_option("--w", rv_w)->required();
    rv->add_option("--z", rv_z)->required();

    // bessel
    auto* bs = app.add_subcommand("bessel", "Bessel J_nu(2w) via the F functional");
    double bs_nu = 0.0, bs_w = 1.0;
    bs->add_option("--nu", bs_nu)->required();
    bs->add_option("--w", bs_w)->required();

    // verify
    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    std::string vf_suite = "all";
    long vf_cases = 100;
    vf->add_option("--suite", vf_suite, "f-identities|jtable|determinants|charpoly|spectrum|bessel|all");
    vf->add_option("--cases", vf_cases, "Randomized case count")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*feval) {
            json out;
            if (feval_exact) {
                const auto seq = parse_rational_list(seq_text);
                out["mode"] = "exact";
                out["value"] = to_string(f_finite(seq));
            } else {
                std::vector<std::complex<double>> seq;
                for (const auto& item : split_list(seq_text)) seq.push_back(std::stod(item));
                out["mode"] = "float";
                out["value"] = complex_json(f_finite(seq));
            }
            emit(out, format);
        } else if (*jm) {
            const Rational w = parse_rational(jm_w);
            Rational value;
            if (jm_method == "recurrence")
                value = j_entry_recurrence(jm_m, jm_n, w);
            else if (jm_method == "f")
                value = j_entry_f(jm_m, jm_n, w);
            else
                value = j_entry(jm_m, jm_n, w);
            emit(json{{"m", jm_m}, {"n", jm_n}, {"method", jm_method}, {"value", to_string(value)}}, format);
        } else if (*det) {
            const auto y = parse_rational_list(det_y);
            const Rational w = parse_rational(det_w);
            const Rational shift = parse_rational(det_shift);
            Rational value;
            if (det_method == "formula") {
                if (!is_zero(shift)) throw std::invalid_argument("det: --shift requires --method oracle");
                value = det_constant_offdiag(std::span<const Rational>(y), w);
            } else {
                value = det_oracle(JacobiMatrix<Rational>::constant_offdiag(y, w, true), shift);
            }
            emit(json{{"method", det_method}, {"det", to_string(value)}}, format);
        } else if (*cp) {
            const Rational w = parse_rational(cp_w);
            Poly<Rational> red;
            if (cp_method == "closed")
                red = charpoly_closed(cp_d, w);
            else if (cp_method == "antisym")
                red = charpoly_via_antisym(cp_d, w);
            else if (cp_method == "f")
                red = charpoly_f(cp_d, w);
            else {
                Poly<Rational> det_poly = charpoly_oracle(k_matrix(cp_d, w));
                red = det_poly.divide_by_z();
                if (cp_d % 2 == 0) red = red * Rational(-1);
            }
            json coeffs = json::array();
            for (long i = 0; i <= 2 * cp_d; ++i) coeffs.push_back(to_string(red.coeff(i)));
            emit(json{{"method", cp_method}, {"coeffs", coeffs}}, format);
        } else if (*sp) {
            const auto res = sp_serial ? spectrum_serial(sp_d, sp_w, tol) : spectrum(sp_d, sp_w, tol);
            double worst = 0.0;
            for (double r : res.residuals) worst = std::max(worst, r);
            emit(json{{"d", sp_d},
                      {"w", sp_w},
                      {"eigenvalues", res.eigenvalues},
                      {"residuals", res.residuals},
                      {"max_residual", worst}},
                 format);
        } else if (*rv) {
            const Rational w = parse_rational(rv_w);
            const Rational z = parse_rational(rv_z);
            const auto r = resolvent(rv_d, w, z);
            json rows = json::array();
            for (const auto& row : r) {
                json jr = json::array();
                for (const auto& e : row) jr.push_back(to_string(e));
                rows.push_back(jr);
            }
            emit(json{{"d", rv_d}, {"z", to_string(z)}, {"matrix", rows}}, format);
        } else if (*bs) {
            const auto v = bessel_j(std::complex<double>(bs_nu), std::complex<double>(bs_w), tol);
            emit(json{{"nu", bs_nu}, {"w", bs_w}, {"value", complex_json(v)}}, format);
        } else if (*vf) {
            if (!verify::is_suite(vf_suite)) {
                std::cerr << "error: unknown suite '" << vf_suite << "'\n";
                return 2;
            }
            const auto report = verify::run_suite(vf_suite, vf_cases, seed);
            if (format == "csv")
                std::cout << verify::report_csv(report);
            else
                std::cout << verify::report_json(report) << '\n';
            std::cerr << "suite " << report.suite << ": " << report.failures << " failure(s) out of "
                      << report.cases << " checks, " << report.wall_time_ms << " ms\n";
            return report.failures == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
