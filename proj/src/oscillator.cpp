#include "nlosc/oscillator.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nlosc/errors.hpp"
#include "nlosc/specfun.hpp"
#include "nlosc/xm_jacobi.hpp"

namespace nlosc::oscillator {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_negative_lambda(double lambda, const char* who) {
    if (!std::isfinite(lambda) || lambda >= 0.0)
        throw domain_error(std::string(who) + ": lambda must be a finite negative number");
}

} // namespace

double domain_right(double lambda) {
    require_negative_lambda(lambda, "domain_right");
    return 1.0 / std::sqrt(-lambda);
}

double map_u(double x, double lambda) {
    const double right = domain_right(lambda);
    if (!(x >= 0.0 && x <= right))
        throw domain_error("map_u: x must lie in [0, |lambda|^(-1/2)]");
    double s = x / right; // exactly 1 at the right endpoint
    if (s > 1.0) s = 1.0;
    return -0.5 * pi + 2.0 * std::asin(s);
}

double map_x(double u, double lambda) {
    require_negative_lambda(lambda, "map_x");
    if (!(u >= -0.5 * pi && u <= 0.5 * pi))
        throw domain_error("map_x: u must lie in [-pi/2, pi/2]");
    return std::sin(0.5 * (u + 0.5 * pi)) / std::sqrt(-lambda);
}

std::pair<double, double> param_map(double lambda) {
    require_negative_lambda(lambda, "param_map");
    return {0.5 * std::abs((lambda + 2.0) / lambda), 0.5};
}

double family_a(double lambda, int m) {
    require_negative_lambda(lambda, "family_a");
    if (m == 0) return 1.0 / (-lambda) - 0.5; // signed branch: conventional family
    return param_map(lambda).first;
}

double energy_map(double eps, double lambda) {
    require_negative_lambda(lambda, "energy_map");
    const double al = -lambda;
    return 2.0 * al * (eps - 1.0 / (4.0 * lambda * lambda) + 1.0 / (4.0 * al));
}

double energy_map_inverse(double E, double lambda) {
    require_negative_lambda(lambda, "energy_map_inverse");
    const double al = -lambda;
    return E / (2.0 * al) + 1.0 / (4.0 * lambda * lambda) - 1.0 / (4.0 * al);
}

double conventional_potential(double lambda, double x) {
    const double right = domain_right(lambda);
    if (!(x >= 0.0 && x < right))
        throw domain_error("conventional_potential: x must lie in [0, |lambda|^(-1/2))");
    const double al = -lambda;
    return (1.0 - al) * x * x / (1.0 - al * x * x);
}

double extended_potential(const OscillatorParams& p, double x) {
    if (p.m < 0) throw domain_error("extended_potential: m must be nonnegative");
    const double base = conventional_potential(p.lambda, x);
    if (p.m == 0) return base;

    const double al = -p.lambda;
    const auto [a, b] = param_map(p.lambda);
    const scarf::ScarfParams sp{a, b, p.m};

    // Route 1: polynomial arithmetic in t = 2|l|x^2 - 1.
    const double t = 2.0 * al * x * x - 1.0;
    const double corr_t = 4.0 * al * scarf::rational_term_t(sp, t);
    // Route 2: trigonometric functions of the transformed coordinate.
    const double u = map_u(x, p.lambda);
    const double corr_u = 4.0 * al * scarf::rational_term(sp, u);

    const double scale = std::abs(base) + std::abs(corr_t) + std::abs(corr_u) + 1.0;
    if (std::abs(corr_t - corr_u) > 1e-10 * scale)
        throw convergence_error("extended_potential: evaluation routes disagree at x = " + fmt(x));
    return base + corr_t;
}

SpectralLine conventional_energy(double lambda, long long n) {
    require_negative_lambda(lambda, "conventional_energy");
    if (n < 0) throw domain_error("conventional_energy: n must be nonnegative");
    const double al = -lambda;
    const double k = 2.0 * static_cast<double>(n) + 1.0;
    return SpectralLine{Model::oscillator, n, 0.5 * al * k * k + 2.0 * static_cast<double>(n) + 1.5};
}

SpectralLine extended_energy(const OscillatorParams& p, long long n) {
    require_negative_lambda(p.lambda, "extended_energy");
    if (p.m < 0) throw domain_error("extended_energy: m must be nonnegative");
    if (n < p.m) throw domain_error("extended_energy: requires n >= m");
    if (p.m == 0)
        return SpectralLine{Model::oscillator_extended, n, conventional_energy(p.lambda, n).energy};
    const auto [a, b] = param_map(p.lambda);
    const double eps = scarf::scarf_energy({a, b, p.m}, n).energy;
    return SpectralLine{Model::oscillator_extended, n, energy_map(eps, p.lambda)};
}

double conventional_wavefunction(double lambda, long long n, double x) {
    const double right = domain_right(lambda);
    if (n < 0) throw domain_error("conventional_wavefunction: n must be nonnegative");
    if (!(x >= 0.0 && x <= right))
        throw domain_error("conventional_wavefunction: x must lie in [0, |lambda|^(-1/2)]");
    if (x == right) return 0.0;
    const double al = -lambda;
    const double mu = 1.0 / lambda + 0.5;
    const double nu = -2.0 * static_cast<double>(n) + 1.0 / lambda - 1.5;
    const double arg = -std::sqrt(al) * x;
    return std::pow(1.0 - al * x * x, 0.25) * specfun::legendre_p(nu, mu, arg);
}

double extended_wavefunction(const OscillatorParams& p, long long n, double x) {
    const double right = domain_right(p.lambda);
    if (p.m < 0) throw domain_error("extended_wavefunction: m must be nonnegative");
    if (n < p.m) throw domain_error("extended_wavefunction: requires n >= m");
    if (!(x >= 0.0 && x <= right))
        throw domain_error("extended_wavefunction: x must lie in [0, |lambda|^(-1/2)]");
    if (x == 0.0 || x == right) return 0.0; // Dirichlet values, exact

    const double al = -p.lambda;
    const double a = family_a(p.lambda, p.m);
    const double t = 2.0 * al * x * x - 1.0;
    const double den = specfun::jacobi_eval({p.m, -a - 1.0, -0.5}, t);
    if (std::abs(den) < 1e-250)
        throw domain_error("extended_wavefunction: denominator polynomial vanishes at x = " + fmt(x));
    const double poly = xm_jacobi::xm_eval({n, a, 0.5, p.m}, t);
    return x * std::pow(2.0 - 2.0 * al * x * x, 0.25 + 0.5 * a) / den * poly;
}

double weight(double lambda, double x) {
    const double right = domain_right(lambda);
    if (!(x >= 0.0 && x < right))
        throw domain_error("weight: x must lie in [0, |lambda|^(-1/2))");
    return 1.0 / std::sqrt(1.0 + lambda * x * x);
}

double osc_norm(const OscillatorParams& p, long long n) {
    require_negative_lambda(p.lambda, "osc_norm");
    if (p.m < 0) throw domain_error("osc_norm: m must be nonnegative");
    return scarf::scarf_norm({family_a(p.lambda, p.m), 0.5, p.m}, n);
}

ValidationReport validate_params(const OscillatorParams& p) {
    ValidationReport rep;
    auto add = [&rep](const char* name, bool pass, const std::string& detail) {
        rep.checks.push_back(ValidationCheck{name, pass, detail});
    };
    const double l = p.lambda;
    const bool neg = std::isfinite(l) && l < 0.0;

    // (1) the excluded set |lambda| = 2/(2L-1), L = 1..m
    bool sing = false;
    std::string sdetail = p.m == 0 ? "vacuous for m = 0" : "no collision for L = 1.." + std::to_string(p.m);
    if (p.m < 0) {
        sing = true;
        sdetail = "m must be nonnegative";
    } else if (neg) {
        for (int L = 1; L <= p.m; ++L) {
            bool hit = false;
            if (p.lambda_exact) {
                Rational absl(std::llabs(p.lambda_exact->num), p.lambda_exact->den);
                hit = absl.compare(2, 2 * L - 1) == 0;
            } else {
                hit = std::abs(std::abs(l) - 2.0 / (2.0 * static_cast<double>(L) - 1.0)) <= 1e-12;
            }
            if (hit) {
                sing = true;
                sdetail = "|lambda| = 2/(2L-1) at L = " + std::to_string(L);
                break;
            }
        }
    }
    add("lambda_avoids_singular_set", !sing, sdetail);

    // (2) admissible interval: m <= 1 needs lambda < 0; m > 1 needs
    // 2/(1-2m) < lambda < 0 with open boundaries.
    bool range_ok = neg;
    std::string rdetail = neg ? "lambda = " + fmt(l) : "lambda must be a finite negative number";
    if (neg && p.m > 1) {
        if (p.lambda_exact) {
            range_ok = p.lambda_exact->compare(2, 1 - 2 * p.m) > 0 && p.lambda_exact->num < 0;
        } else {
            range_ok = l > 2.0 / (1.0 - 2.0 * static_cast<double>(p.m));
        }
        if (!range_ok)
            rdetail = "lambda = " + fmt(l) + " not inside (2/(1-2m), 0) = (" +
                      fmt(2.0 / (1.0 - 2.0 * static_cast<double>(p.m))) + ", 0)";
    }
    if (p.m < 0) {
        range_ok = false;
        rdetail = "m must be nonnegative";
    }
    add("lambda_in_admissible_interval", range_ok, rdetail);

    // (3) induced well parameters
    bool mapped_ok = false;
    std::string mdetail;
    if (!neg || p.m < 0) {
        mdetail = "not evaluated: lambda or m out of domain";
    } else {
        const auto [a, b] = param_map(l);
        ValidationReport sub = scarf::validate_scarf({a, b, p.m});
        mapped_ok = sub.valid;
        if (sub.valid) {
            mdetail = "a = " + fmt(a) + ", b = " + fmt(b);
        } else {
            mdetail = "failed:";
            for (const auto& c : sub.checks)
                if (!c.pass) mdetail += " " + c.name;
        }
    }
    add("induced_well_parameters_admissible", mapped_ok, mdetail);

    rep.valid = true;
    for (const auto& c : rep.checks) rep.valid = rep.valid && c.pass;
    return rep;
}

} // namespace nlosc::oscillator
