#include "nlosc/scarf.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "nlosc/errors.hpp"
#include "nlosc/specfun.hpp"
#include "nlosc/xm_jacobi.hpp"

namespace nlosc::scarf {

using specfun::JacobiSpec;
using specfun::jacobi_eval;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Shared core of both rational_term routes: t = sin u, cos2 = cos^2 u.
double rational_core(const ScarfParams& p, double t, double cos2) {
    if (p.m == 0) return 0.0;
    const double c = p.a - p.b - static_cast<double>(p.m) + 1.0;
    const double den = jacobi_eval({p.m, -p.a - 1.0, p.b - 1.0}, t);
    if (std::abs(den) < 1e-250)
        throw domain_error("rational_term: denominator polynomial vanishes at t = " + fmt(t));
    const double q = jacobi_eval({p.m - 1, -p.a, p.b}, t) / den;
    return -2.0 * static_cast<double>(p.m) * c
           - c * (p.a + p.b + (p.a - p.b + 1.0) * t) * q
           + 0.5 * c * c * cos2 * q * q;
}

} // namespace

double scarf_potential(const ScarfParams& p, double u) {
    if (!(std::abs(u) < 0.5 * pi))
        throw domain_error("scarf_potential: |u| must be < pi/2");
    const double sec = 1.0 / std::cos(u);
    const double tn = std::tan(u);
    return 0.25 * (2.0 * p.a * p.a + 2.0 * p.b * p.b - 1.0) * sec * sec
           - 0.5 * (p.b * p.b - p.a * p.a) * sec * tn;
}

double rational_term(const ScarfParams& p, double u) {
    if (!(std::abs(u) <= 0.5 * pi))
        throw domain_error("rational_term: |u| must be <= pi/2");
    const double c = std::cos(u);
    return rational_core(p, std::sin(u), c * c);
}

double rational_term_t(const ScarfParams& p, double t) {
    if (!(t >= -1.0 && t <= 1.0))
        throw domain_error("rational_term_t: t must lie in [-1, 1]");
    return rational_core(p, t, 1.0 - t * t);
}

SpectralLine scarf_energy(const ScarfParams& p, long long n) {
    if (n < p.m) throw domain_error("scarf_energy: requires n >= m");
    const double half = 0.5 * (2.0 * static_cast<double>(n - p.m) + p.a + p.b + 1.0);
    return SpectralLine{p.m > 0 ? Model::scarf_extended : Model::scarf, n, half * half};
}

double scarf_wavefunction(const ScarfParams& p, long long n, double u) {
    if (n < p.m) throw domain_error("scarf_wavefunction: requires n >= m");
    if (std::abs(u) > 0.5 * pi)
        throw domain_error("scarf_wavefunction: |u| must be <= pi/2");
    if (std::abs(u) == 0.5 * pi) return 0.0; // Dirichlet limit value
    const double s = std::sin(u);
    const double den = jacobi_eval({p.m, -p.a - 1.0, p.b - 1.0}, s);
    if (std::abs(den) < 1e-250)
        throw domain_error("scarf_wavefunction: denominator polynomial vanishes at u = " + fmt(u));
    const double poly = xm_jacobi::xm_eval({n, p.a, p.b, p.m}, s);
    return std::pow(1.0 - s, 0.5 * p.a + 0.25) * std::pow(1.0 + s, 0.5 * p.b + 0.25) / den * poly;
}

double scarf_norm(const ScarfParams& p, long long n) {
    if (n < p.m) throw domain_error("scarf_norm: requires n >= m");
    const double a = p.a;
    const double b = p.b;
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(p.m);

    const double sine = specfun::sinpi(nn + b);
    if (std::abs(sine) <= 1e-12)
        throw domain_error("scarf_norm: sin((n+b) pi) vanishes (integer b)");
    const double f1 = 2.0 * nn - 2.0 * mm + a + b + 1.0;
    const double f2 = nn - mm + a + 1.0;
    if (std::abs(f1) <= 1e-12 || std::abs(f2) <= 1e-12)
        throw domain_error("scarf_norm: degenerate parameter combination");

    const double sign = (p.m % 2 == 0) ? 1.0 : -1.0;
    const double num = sign * pi * std::pow(2.0, a + b + 1.0) * (nn + b) *
                       (nn - 2.0 * mm + a + 1.0) * specfun::gamma(nn - mm + a + 1.0);
    const double den = sine * f1 * f2 * specfun::gamma(nn - mm + a + b + 1.0) *
                       specfun::gamma(mm - nn - b + 1.0) * specfun::gamma(nn - mm + 1.0);
    return num / den;
}

ValidationReport validate_scarf(const ScarfParams& p) {
    ValidationReport rep;
    auto add = [&rep](const char* name, bool pass, const std::string& detail) {
        rep.checks.push_back(ValidationCheck{name, pass, detail});
    };

    if (p.m == 0) {
        add("b_nonzero", true, "vacuous for m = 0");
        add("a_excludes_integers_below_m", true, "vacuous for m = 0");
        add("a_minus_m_plus_2_positive", true, "vacuous for m = 0");
        add("sign_of_a_minus_m_plus_1_matches_b", true, "vacuous for m = 0");
        rep.valid = true;
        return rep;
    }

    const bool b_ok = p.b != 0.0;
    add("b_nonzero", b_ok, "b = " + fmt(p.b));

    bool member = false;
    int offending = -1;
    for (int j = 0; j < p.m; ++j) {
        if (std::abs(p.a - static_cast<double>(j)) <= 1e-12) {
            member = true;
            offending = j;
            break;
        }
    }
    add("a_excludes_integers_below_m", !member,
        member ? "a = " + fmt(p.a) + " collides with " + std::to_string(offending)
               : "a = " + fmt(p.a));

    const double am2 = p.a - static_cast<double>(p.m) + 2.0;
    add("a_minus_m_plus_2_positive", am2 > 0.0, "a - m + 2 = " + fmt(am2));

    const double am1 = p.a - static_cast<double>(p.m) + 1.0;
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
    const bool sign_ok = sgn(am1) == sgn(p.b) && sgn(am1) != 0;
    add("sign_of_a_minus_m_plus_1_matches_b", sign_ok,
        "a - m + 1 = " + fmt(am1) + ", b = " + fmt(p.b));

    rep.valid = true;
    for (const auto& c : rep.checks) rep.valid = rep.valid && c.pass;
    return rep;
}

} // namespace nlosc::scarf
