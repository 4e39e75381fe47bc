#include "nlosc/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nlosc/errors.hpp"

namespace nlosc::specfun {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients. Relative error is a
// few ulps over the range used here (|x| <= 50 away from poles).
constexpr double lanczos_g = 4.7421875;
constexpr double lanczos_coef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Valid for x >= 1/2.
double gamma_lanczos(double x) {
    double acc = lanczos_coef[0];
    for (int k = 1; k < 15; ++k) acc += lanczos_coef[k] / (x - 1.0 + k);
    double t = x + lanczos_g - 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

} // namespace

double sinpi(double x) {
    if (!std::isfinite(x)) throw domain_error("sinpi: non-finite argument");
    double r = x - 2.0 * std::round(0.5 * x); // r in [-1, 1], congruent mod 2
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi * r);
}

double cospi(double x) {
    return sinpi(0.5 - std::abs(x));
}

double gamma(double x) {
    if (!std::isfinite(x)) throw domain_error("gamma: non-finite argument");
    if (x < 0.5) {
        double nearest = std::round(x);
        if (nearest <= 0.0 && std::abs(x - nearest) <= 1e-12)
            throw domain_error("gamma: pole at nonpositive integer x = " + std::to_string(x));
        // Reflection; sinpi keeps the argument reduction exact for large |x|.
        return pi / (sinpi(x) * gamma_lanczos(1.0 - x));
    }
    return gamma_lanczos(x);
}

namespace {

long double gen_binomial_wide(long double p, long long k) {
    long double acc = 1.0L;
    for (long long j = 1; j <= k; ++j)
        acc *= (p - static_cast<long double>(j) + 1.0L) / static_cast<long double>(j);
    return acc;
}

} // namespace

double gen_binomial(double p, long long k) {
    if (k < 0) throw domain_error("gen_binomial: k must be nonnegative");
    return static_cast<double>(gen_binomial_wide(p, k));
}

double jacobi_eval(const JacobiSpec& spec, double x) {
    if (spec.degree == -1) return 0.0;
    if (spec.degree < -1) throw domain_error("jacobi_eval: degree below -1");
    long long n = spec.degree;
    // Finite-sum form; no recurrence, so negative integer alpha/beta are safe.
    // The terms alternate and can exceed the sum by several orders near
    // n = 20, so the whole sum is carried in extended precision; the order of
    // operations stays fixed, keeping results reproducible.
    std::vector<long double> pow_minus(static_cast<std::size_t>(n) + 1);
    std::vector<long double> pow_plus(static_cast<std::size_t>(n) + 1);
    pow_minus[0] = 1.0L;
    pow_plus[0] = 1.0L;
    const long double xm = static_cast<long double>(x) - 1.0L;
    const long double xp = static_cast<long double>(x) + 1.0L;
    for (long long j = 1; j <= n; ++j) {
        pow_minus[static_cast<std::size_t>(j)] = pow_minus[static_cast<std::size_t>(j - 1)] * xm;
        pow_plus[static_cast<std::size_t>(j)] = pow_plus[static_cast<std::size_t>(j - 1)] * xp;
    }
    long double acc = 0.0L;
    for (long long k = 0; k <= n; ++k) {
        acc += gen_binomial_wide(spec.alpha + static_cast<long double>(n), k) *
               gen_binomial_wide(spec.beta + static_cast<long double>(n), n - k) *
               pow_minus[static_cast<std::size_t>(n - k)] * pow_plus[static_cast<std::size_t>(k)];
    }
    return static_cast<double>(std::ldexp(acc, static_cast<int>(-n)));
}

double jacobi_derivative(const JacobiSpec& spec, double x) {
    if (spec.degree < -1) throw domain_error("jacobi_derivative: degree below -1");
    if (spec.degree <= 0) return 0.0;
    JacobiSpec d{spec.degree - 1, spec.alpha + 1.0, spec.beta + 1.0};
    return 0.5 * (static_cast<double>(spec.degree) + spec.alpha + spec.beta + 1.0) * jacobi_eval(d, x);
}

namespace {

// k such that v == -k for integer k >= 0 (within 1e-12), else -1.
long long nonpositive_integer_index(double v) {
    double r = std::round(v);
    if (r <= 0.0 && std::abs(v - r) <= 1e-12) return static_cast<long long>(-r);
    return -1;
}

} // namespace

double hyp2f1(double a, double b, double c, double z) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
        throw domain_error("hyp2f1: non-finite argument");
    long long ka = nonpositive_integer_index(a);
    long long kb = nonpositive_integer_index(b);
    long long last = -1; // index of the last nonzero term when terminating
    if (ka >= 0 && kb >= 0) last = ka < kb ? ka : kb;
    else if (ka >= 0) last = ka;
    else if (kb >= 0) last = kb;

    long long kc = nonpositive_integer_index(c);
    if (kc >= 0 && (last < 0 || last > kc))
        throw domain_error("hyp2f1: c is a nonpositive integer reached by the series");
    if (last < 0 && std::abs(z) >= 1.0)
        throw domain_error("hyp2f1: |z| must be < 1 for a non-terminating series");

    // Euler transformation: 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z).
    // When c-a or c-b is a nonpositive integer the transformed series
    // terminates exactly; the direct series for z near 1 grows by many orders
    // before decaying and its cancellation destroys the value, so the finite
    // form is used whenever it exists.
    if (last < 0 && (nonpositive_integer_index(c - a) >= 0 || nonpositive_integer_index(c - b) >= 0))
        return std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);

    double term = 1.0;
    double sum = 1.0;
    double peak = 1.0;
    const long long cap = 100000;
    for (long long k = 0; k < cap; ++k) {
        if (last >= 0 && k >= last) return sum; // next term carries a vanished Pochhammer factor
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * (static_cast<double>(k) + 1.0)) * z;
        sum += term;
        if (std::abs(sum) > peak) peak = std::abs(sum);
        if (last < 0 && std::abs(term) <= 1e-16 * std::abs(sum)) {
            // Partial sums that dwarf the result mean the digits left are
            // noise; fail loudly instead of returning a degraded value.
            if (peak > 1e12 * std::abs(sum))
                throw convergence_error("hyp2f1: catastrophic cancellation in the direct series");
            return sum;
        }
    }
    throw convergence_error("hyp2f1: series did not meet the tail bound within 100000 terms");
}

double legendre_p(double nu, double mu, double x) {
    if (!(x > -1.0 && x < 1.0)) throw domain_error("legendre_p: x must lie in (-1, 1)");
    double om = 1.0 - mu;
    if (nonpositive_integer_index(om) >= 0)
        throw domain_error("legendre_p: 1 - mu is a nonpositive integer (unsupported)");
    double pref = std::pow((1.0 + x) / (1.0 - x), 0.5 * mu) / gamma(om);
    return pref * hyp2f1(-nu, nu + 1.0, om, 0.5 * (1.0 - x));
}

} // namespace nlosc::specfun
