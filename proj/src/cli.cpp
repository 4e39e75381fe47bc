#include "nlosc/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nlosc/errors.hpp"
#include "nlosc/oscillator.hpp"
#include "nlosc/rational.hpp"
#include "nlosc/scarf.hpp"
#include "nlosc/types.hpp"
#include "nlosc/verify.hpp"

namespace nlosc::cli {

namespace {

using json = nlohmann::ordered_json;
using oscillator::OscillatorParams;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    q += "\"";
    return q;
}

struct LambdaArg {
    std::string text;
    double value = 0.0;
    std::optional<Rational> exact{};
};

bool parse_lambda(const std::string& text, LambdaArg& arg) {
    arg.text = text;
    if (auto r = parse_rational(text)) {
        arg.value = r->to_double();
        arg.exact = *r;
        return true;
    }
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end != text.c_str() + text.size()) return false;
    arg.value = v;
    arg.exact.reset();
    return true;
}

bool parse_n_range(const std::string& text, long long& lo, long long& hi) {
    auto parse_int = [](const std::string& s, long long& out) {
        if (s.empty()) return false;
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(s.c_str(), &end, 10);
        if (errno != 0 || end != s.c_str() + s.size()) return false;
        out = v;
        return true;
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        if (!parse_int(text, lo)) return false;
        hi = lo;
        return true;
    }
    if (!parse_int(text.substr(0, dots), lo)) return false;
    if (!parse_int(text.substr(dots + 2), hi)) return false;
    return hi >= lo;
}

struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols; // one vector per name, equal length
};

void write_table_csv(std::ostream& os, const Table& t) {
    for (std::size_t c = 0; c < t.names.size(); ++c)
        os << (c ? "," : "") << t.names[c];
    os << "\n";
    const std::size_t rows = t.cols.empty() ? 0 : t.cols[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < t.cols.size(); ++c)
            os << (c ? "," : "") << fmt(t.cols[c][r]);
        os << "\n";
    }
}

json table_json(const Table& t) {
    json cols = json::object();
    for (std::size_t c = 0; c < t.names.size(); ++c) {
        json arr = json::array();
        for (double v : t.cols[c]) arr.push_back(v);
        cols[t.names[c]] = arr;
    }
    return cols;
}

json params_json(const LambdaArg& lam, int m) {
    json p;
    p["lambda"] = lam.value;
    if (lam.exact)
        p["lambda_exact"] = std::to_string(lam.exact->num) + "/" + std::to_string(lam.exact->den);
    p["m"] = m;
    return p;
}

json validation_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"checks", checks}, {"valid", rep.valid}};
}

json report_json(const VerificationReport& rep) {
    json j;
    j["kind"] = report_kind_name(rep.kind);
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    if (!rep.columns.empty()) j["columns"] = rep.columns;
    json vals = json::array();
    for (const auto& row : rep.values) {
        json r = json::array();
        for (double v : row) r.push_back(v);
        vals.push_back(r);
    }
    j["values"] = vals;
    json meta = json::object();
    for (const auto& [k, v] : rep.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j;
}

struct Options {
    LambdaArg lambda;
    std::string lambda_text;
    int m = 0;
    std::string n_text;
    long long n_lo = 0;
    long long n_hi = 0;
    int points = 400;
    int order = 128;
    int grid = 2000;
    int count = 3;
    double tol = std::numeric_limits<double>::quiet_NaN();
    bool compare_fd = false;
    std::string format = "csv";
    std::string out_path;
    std::vector<double> x_range;
};

OscillatorParams make_params(const Options& o) {
    OscillatorParams p;
    p.lambda = o.lambda.value;
    p.m = o.m;
    p.lambda_exact = o.lambda.exact;
    return p;
}

// Returns 0 when valid; otherwise writes the failing checks to err and
// returns 2. `rep_out` receives the report either way.
int gate_params(const OscillatorParams& p, std::ostream& err, ValidationReport& rep_out) {
    rep_out = oscillator::validate_params(p);
    if (rep_out.valid) return 0;
    err << "invalid parameters:\n";
    for (const auto& c : rep_out.checks)
        if (!c.pass) err << "  " << c.name << ": " << c.detail << "\n";
    return 2;
}

int with_sink(const Options& o, std::ostream& out, std::ostream& err,
              const std::function<int(std::ostream&)>& body) {
    if (o.out_path.empty()) return body(out);
    std::ofstream ofs(o.out_path, std::ios::binary);
    if (!ofs) {
        err << "cannot open output file: " << o.out_path << "\n";
        return 1;
    }
    return body(ofs);
}

std::pair<double, double> x_span(const Options& o) {
    const double right = oscillator::domain_right(o.lambda.value);
    if (o.x_range.size() == 2) return {o.x_range[0], o.x_range[1]};
    return {1e-3 * right, (1.0 - 1e-3) * right};
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    const ValidationReport rep = oscillator::validate_params(p);
    const int code = rep.valid ? 0 : 2;
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["report"] = validation_json(rep);
            j["pass"] = rep.valid;
            os << j.dump(2) << "\n";
        } else {
            os << "check,pass,detail\n";
            for (const auto& c : rep.checks)
                os << c.name << "," << (c.pass ? "true" : "false") << ","
                   << csv_quote(c.detail) << "\n";
            os << "overall," << (rep.valid ? "true" : "false") << ",\"\"\n";
        }
        return code;
    });
}

int cmd_potential(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;

    const auto [xlo, xhi] = x_span(o);
    Table t;
    t.names = {"x", "V_conventional", "V_extended"};
    t.cols.assign(3, {});
    for (int i = 0; i < o.points; ++i) {
        const double x = o.points == 1
                             ? xlo
                             : xlo + (xhi - xlo) * static_cast<double>(i) / static_cast<double>(o.points - 1);
        t.cols[0].push_back(x);
        t.cols[1].push_back(oscillator::conventional_potential(p.lambda, x));
        t.cols[2].push_back(oscillator::extended_potential(p, x));
    }
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["columns"] = table_json(t);
            j["pass"] = true;
            os << j.dump(2) << "\n";
        } else {
            write_table_csv(os, t);
        }
        return 0;
    });
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;
    if (o.n_lo < p.m) {
        err << "parameter error: spectrum requires n >= m\n";
        return 2;
    }

    Table t;
    t.names = {"n", "E"};
    t.cols.assign(2, {});
    for (long long n = o.n_lo; n <= o.n_hi; ++n) {
        t.cols[0].push_back(static_cast<double>(n));
        t.cols[1].push_back(oscillator::extended_energy(p, n).energy);
    }

    bool pass = true;
    if (o.compare_fd) {
        const double tol = std::isnan(o.tol) ? 1e-3 : o.tol;
        const int count = static_cast<int>(o.n_hi - p.m + 1);
        const VerificationReport rep = verify::eig_compare(p, count, o.grid, tol);
        t.names.push_back("E_fd");
        t.names.push_back("rel_dev");
        t.cols.push_back({});
        t.cols.push_back({});
        for (long long n = o.n_lo; n <= o.n_hi; ++n) {
            const auto& row = rep.values[static_cast<std::size_t>(n - p.m)];
            t.cols[2].push_back(row[2]);
            t.cols[3].push_back(row[3]);
            pass = pass && row[3] <= tol;
        }
    }

    const int code = pass ? 0 : 3;
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["columns"] = table_json(t);
            j["pass"] = pass;
            os << j.dump(2) << "\n";
        } else {
            write_table_csv(os, t);
        }
        return code;
    });
}

int cmd_wavefunction(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;
    if (o.n_lo < p.m) {
        err << "parameter error: wavefunction requires n >= m\n";
        return 2;
    }

    const auto [xlo, xhi] = x_span(o);
    const bool single = o.n_lo == o.n_hi;
    Table t;
    t.names = {"x"};
    t.cols.assign(1, {});
    for (int i = 0; i < o.points; ++i) {
        const double x = o.points == 1
                             ? xlo
                             : xlo + (xhi - xlo) * static_cast<double>(i) / static_cast<double>(o.points - 1);
        t.cols[0].push_back(x);
    }
    for (long long n = o.n_lo; n <= o.n_hi; ++n) {
        const double norm = verify::weighted_inner_product(p, n, n, o.order);
        std::vector<double> psi_col, den_col;
        for (double x : t.cols[0]) {
            const double psi = oscillator::extended_wavefunction(p, n, x);
            psi_col.push_back(psi);
            den_col.push_back(psi * psi * oscillator::weight(p.lambda, x) / norm);
        }
        t.names.push_back(single ? "psi_unnormalized" : "psi_unnormalized_" + std::to_string(n));
        t.cols.push_back(std::move(psi_col));
        t.names.push_back(single ? "density" : "density_" + std::to_string(n));
        t.cols.push_back(std::move(den_col));
    }
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["columns"] = table_json(t);
            j["pass"] = true;
            os << j.dump(2) << "\n";
        } else {
            write_table_csv(os, t);
        }
        return 0;
    });
}

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;
    if (o.n_lo < p.m) {
        err << "parameter error: gram requires n >= m\n";
        return 2;
    }
    const double tol = std::isnan(o.tol) ? 1e-6 : o.tol;
    const VerificationReport rep = verify::gram_matrix(p, o.n_lo, o.n_hi, o.order, tol);
    const int code = rep.pass ? 0 : 3;
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["report"] = report_json(rep);
            j["pass"] = rep.pass;
            os << j.dump(2) << "\n";
        } else {
            os << "l,n,value\n";
            for (std::size_t i = 0; i < rep.values.size(); ++i)
                for (std::size_t j = 0; j < rep.values[i].size(); ++j)
                    os << (o.n_lo + static_cast<long long>(i)) << ","
                       << (o.n_lo + static_cast<long long>(j)) << ","
                       << fmt(rep.values[i][j]) << "\n";
            os << "max_offdiag_rel,," << fmt(rep.metadata.at("max_offdiag_rel")) << "\n";
            os << "diag_ratio_cv,," << fmt(rep.metadata.at("diag_ratio_cv")) << "\n";
            os << "pass,," << (rep.pass ? "true" : "false") << "\n";
        }
        return code;
    });
}

int cmd_residual(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;
    if (o.n_lo < p.m) {
        err << "parameter error: residual requires n >= m\n";
        return 2;
    }
    const double tol = std::isnan(o.tol) ? 1e-7 : o.tol;
    std::vector<VerificationReport> reps;
    bool pass = true;
    for (long long n = o.n_lo; n <= o.n_hi; ++n) {
        reps.push_back(verify::ode_residual(p, n, o.points, tol));
        pass = pass && reps.back().pass;
    }
    const int code = pass ? 0 : 3;
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json arr = json::array();
            for (const auto& r : reps) arr.push_back(report_json(r));
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["report"] = arr;
            j["pass"] = pass;
            os << j.dump(2) << "\n";
        } else {
            os << "n,max_rel_residual,control_rel_residual,pass\n";
            for (const auto& r : reps)
                os << fmt(r.values[0][0]) << "," << fmt(r.values[0][1]) << ","
                   << fmt(r.values[0][2]) << "," << (r.pass ? "true" : "false") << "\n";
        }
        return code;
    });
}

int cmd_eig_compare(const Options& o, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(o);
    ValidationReport vr;
    if (int rc = gate_params(p, err, vr)) return rc;
    const double tol = std::isnan(o.tol) ? 1e-3 : o.tol;
    const VerificationReport rep = verify::eig_compare(p, o.count, o.grid, tol);
    const int code = rep.pass ? 0 : 3;
    return with_sink(o, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["params"] = params_json(o.lambda, o.m);
            j["report"] = report_json(rep);
            j["pass"] = rep.pass;
            os << j.dump(2) << "\n";
        } else {
            os << "n,E_closed,E_fd,rel_dev\n";
            for (const auto& row : rep.values)
                os << fmt(row[0]) << "," << fmt(row[1]) << "," << fmt(row[2]) << ","
                   << fmt(row[3]) << "\n";
            os << "pass,,," << (rep.pass ? "true" : "false") << "\n";
        }
        return code;
    });
}

// Regenerates the full reference table set into a directory.
int cmd_repro(const Options& o, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    const std::string dir = o.out_path.empty() ? "repro_out" : o.out_path;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        err << "cannot create output directory: " << dir << "\n";
        return 1;
    }

    json summary;
    summary["artifacts"] = json::array();
    bool all_pass = true;

    auto run_child = [&](const std::vector<std::string>& args, const std::string& file,
                         int expect_max) {
        std::ofstream ofs(dir + "/" + file, std::ios::binary);
        std::ostringstream child_err;
        const int rc = run(args, ofs, child_err);
        const bool ok = rc <= expect_max;
        all_pass = all_pass && ok;
        summary["artifacts"].push_back(json{{"file", file},
                                            {"exit_code", rc},
                                            {"pass", ok}});
        out << (ok ? "wrote " : "FAILED ") << dir << "/" << file << "\n";
        if (!ok) err << child_err.str();
    };

    const std::string grid = std::to_string(o.grid);
    const std::string order = std::to_string(o.order);

    // Potentials for the three reference parameter sets.
    run_child({"potential", "--lambda", "-1/20", "--m", "1"}, "potential_l-1over20_m1.csv", 0);
    run_child({"potential", "--lambda", "-5", "--m", "1"}, "potential_l-5_m1.csv", 0);
    run_child({"potential", "--lambda", "-13/20", "--m", "2"}, "potential_l-13over20_m2.csv", 0);

    // Ground-state densities, lambda = -1/10, m in {0, 1, 3, 5} (n = m).
    for (int m : {0, 1, 3, 5}) {
        run_child({"wavefunction", "--lambda", "-1/10", "--m", std::to_string(m), "--n",
                   std::to_string(m), "--order", order},
                  "density_l-1over10_m" + std::to_string(m) + ".csv", 0);
    }

    // Extended levels n = 3..5 at lambda = -1/5, m = 3, and the conventional
    // partner levels n = 0..2.
    run_child({"wavefunction", "--lambda", "-1/5", "--m", "3", "--n", "3..5", "--order", order},
              "density_l-1over5_m3.csv", 0);
    run_child({"wavefunction", "--lambda", "-1/5", "--m", "0", "--n", "0..2", "--order", order},
              "density_l-1over5_m0.csv", 0);

    // Spectra with the finite-difference cross-check.
    run_child({"spectrum", "--lambda", "-1/5", "--m", "3", "--n", "3..5", "--compare-fd",
               "--grid", grid},
              "spectrum_l-1over5_m3.csv", 0);
    run_child({"spectrum", "--lambda", "-1/10", "--m", "1", "--n", "1..4", "--compare-fd",
               "--grid", grid},
              "spectrum_l-1over10_m1.csv", 0);

    // Orthogonality and closed-form-norm consistency.
    run_child({"gram", "--lambda", "-1/10", "--m", "1", "--n", "1..5", "--order", order,
               "--format", "json"},
              "gram_l-1over10_m1.json", 0);
    run_child({"gram", "--lambda", "-1/5", "--m", "3", "--n", "3..6", "--order", order,
               "--format", "json"},
              "gram_l-1over5_m3.json", 0);

    // Equation residuals for every reference parameter set.
    run_child({"residual", "--lambda", "-1/20", "--m", "1", "--n", "1..3", "--format", "json"},
              "residual_l-1over20_m1.json", 0);
    run_child({"residual", "--lambda", "-5", "--m", "1", "--n", "1..3", "--format", "json"},
              "residual_l-5_m1.json", 0);
    run_child({"residual", "--lambda", "-13/20", "--m", "2", "--n", "2..4", "--format", "json"},
              "residual_l-13over20_m2.json", 0);
    for (int m : {0, 1, 3, 5}) {
        run_child({"residual", "--lambda", "-1/10", "--m", std::to_string(m), "--n",
                   std::to_string(m), "--format", "json"},
                  "residual_l-1over10_m" + std::to_string(m) + ".json", 0);
    }
    run_child({"residual", "--lambda", "-1/5", "--m", "3", "--n", "3..5", "--format", "json"},
              "residual_l-1over5_m3.json", 0);

    // Spectral cross-checks through the coordinate transformation.
    run_child({"eig-compare", "--lambda", "-1/5", "--m", "3", "--count", "3", "--grid", grid,
               "--format", "json"},
              "eig_l-1over5_m3.json", 0);
    run_child({"eig-compare", "--lambda", "-1/10", "--m", "1", "--count", "4", "--grid", grid,
               "--format", "json"},
              "eig_l-1over10_m1.json", 0);
    run_child({"validate", "--lambda", "-5", "--m", "1", "--format", "json"},
              "validate_l-5_m1.json", 0);
    run_child({"validate", "--lambda", "-13/20", "--m", "2", "--format", "json"},
              "validate_l-13over20_m2.json", 0);

    summary["all_pass"] = all_pass;
    std::ofstream sfs(dir + "/summary.json", std::ios::binary);
    sfs << summary.dump(2) << "\n";
    out << "wrote " << dir << "/summary.json\n";
    return all_pass ? 0 : 3;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"rationally extended nonlinear oscillator toolkit"};
    app.require_subcommand(0, 1);

    auto add_common = [&o](CLI::App* sub, bool needs_lambda) {
        auto* lam = sub->add_option("--lambda", o.lambda_text,
                                    "negative lambda, rational p/q or float");
        if (needs_lambda) lam->required();
        sub->add_option("--m", o.m, "rational-extension index (m >= 0)");
        sub->add_option("--format", o.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out_path, "output file (repro: directory)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check parameter regularity");
    add_common(validate, true);

    CLI::App* potential = app.add_subcommand("potential", "tabulate conventional and extended potentials");
    add_common(potential, true);
    potential->add_option("--points", o.points, "number of grid points");
    potential->add_option("--x-range", o.x_range, "grid endpoints")->expected(2);

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum, optional FD cross-check");
    add_common(spectrum, true);
    spectrum->add_option("--n", o.n_text, "level index or inclusive range a..b")->required();
    spectrum->add_flag("--compare-fd", o.compare_fd, "compare with finite-difference eigenvalues");
    spectrum->add_option("--grid", o.grid, "finite-difference interior grid points");
    spectrum->add_option("--tol", o.tol, "relative tolerance");

    CLI::App* wavefunction = app.add_subcommand("wavefunction", "tabulate wavefunctions and densities");
    add_common(wavefunction, true);
    wavefunction->add_option("--n", o.n_text, "level index or inclusive range a..b")->required();
    wavefunction->add_option("--points", o.points, "number of grid points");
    wavefunction->add_option("--order", o.order, "quadrature order for normalization");
    wavefunction->add_option("--x-range", o.x_range, "grid endpoints")->expected(2);

    CLI::App* gram = app.add_subcommand("gram", "orthogonality and norm-consistency check");
    add_common(gram, true);
    gram->add_option("--n", o.n_text, "inclusive level range a..b")->required();
    gram->add_option("--order", o.order, "quadrature order");
    gram->add_option("--tol", o.tol, "pass tolerance");

    CLI::App* residual = app.add_subcommand("residual", "differential-equation residual check");
    add_common(residual, true);
    residual->add_option("--n", o.n_text, "level index or inclusive range a..b")->required();
    residual->add_option("--points", o.points, "residual grid size");
    residual->add_option("--tol", o.tol, "pass tolerance");

    CLI::App* eig = app.add_subcommand("eig-compare", "finite-difference vs closed-form spectrum");
    add_common(eig, true);
    eig->add_option("--count", o.count, "number of levels to compare");
    eig->add_option("--grid", o.grid, "finite-difference interior grid points");
    eig->add_option("--tol", o.tol, "pass tolerance");

    CLI::App* repro = app.add_subcommand("repro", "regenerate the full reference table set");
    repro->add_option("--out", o.out_path, "output directory");
    repro->add_option("--grid", o.grid, "finite-difference interior grid points");
    repro->add_option("--order", o.order, "quadrature order");

    std::vector<const char*> argv;
    argv.push_back("nlosc");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (app.get_subcommands().empty()) {
        out << app.help();
        return 0;
    }
    CLI::App* sub = app.get_subcommands().front();

    try {
        if (sub != repro) {
            if (sub->count("--lambda") > 0 && !parse_lambda(o.lambda_text, o.lambda)) {
                err << "usage error: cannot parse --lambda value '" << o.lambda_text << "'\n";
                return 1;
            }
            const CLI::Option* nopt = sub->get_option_no_throw("--n");
            if (nopt != nullptr && nopt->count() > 0 && !parse_n_range(o.n_text, o.n_lo, o.n_hi)) {
                err << "usage error: cannot parse --n value '" << o.n_text << "'\n";
                return 1;
            }
        }
        if (sub == validate) return cmd_validate(o, out, err);
        if (sub == potential) return cmd_potential(o, out, err);
        if (sub == spectrum) return cmd_spectrum(o, out, err);
        if (sub == wavefunction) return cmd_wavefunction(o, out, err);
        if (sub == gram) return cmd_gram(o, out, err);
        if (sub == residual) return cmd_residual(o, out, err);
        if (sub == eig) return cmd_eig_compare(o, out, err);
        if (sub == repro) return cmd_repro(o, out, err);
    } catch (const domain_error& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        err << "verification error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand given\n";
    return 1;
}

} // namespace nlosc::cli
