#include "nlosc/xm_jacobi.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "nlosc/errors.hpp"
#include "nlosc/specfun.hpp"

namespace nlosc::xm_jacobi {

using specfun::JacobiSpec;
using specfun::jacobi_eval;

double xm_eval(const XmSpec& spec, double t) {
    if (spec.m < 0) throw domain_error("xm_eval: m must be nonnegative");
    if (spec.n < spec.m) throw domain_error("xm_eval: requires n >= m");
    const double a = spec.a;
    const double b = spec.b;
    const long long n = spec.n;
    const long long m = spec.m;
    const double den = a + static_cast<double>(n - m) + 1.0;
    if (std::abs(den) <= 1e-14)
        throw domain_error("xm_eval: a + n - m + 1 vanishes");

    // Two-term representation in classical Jacobi polynomials; P_{-1} == 0
    // makes the first term drop out at n == m.
    double term1 = 0.0;
    if (n - m - 1 >= 0) {
        term1 = (a + b + static_cast<double>(n - m) + 1.0) / (2.0 * den) * (t - 1.0) *
                jacobi_eval({m, -a - 1.0, b - 1.0}, t) *
                jacobi_eval({n - m - 1, a + 2.0, b}, t);
    }
    double term2 = (a - static_cast<double>(m) + 1.0) / den *
                   jacobi_eval({m, -a - 2.0, b}, t) *
                   jacobi_eval({n - m, a + 1.0, b - 1.0}, t);
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * (term1 + term2);
}

long long xm_degree(const XmSpec& spec) {
    if (spec.m < 0) throw domain_error("xm_degree: m must be nonnegative");
    if (spec.n < spec.m) throw domain_error("xm_degree: requires n >= m");
    const long long n = spec.n;
    const std::size_t pts = static_cast<std::size_t>(n) + 2;

    // Chebyshev nodes on [-1, 1], ascending.
    std::vector<double> xs(pts), ys(pts);
    for (std::size_t i = 0; i < pts; ++i) {
        xs[i] = -std::cos(pi * (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(pts)));
        ys[i] = xm_eval(spec, xs[i]);
    }
    double scale = 0.0;
    for (double y : ys) scale = std::max(scale, std::abs(y));
    const double tol = 1e-9 * std::max(scale, 1.0);

    // top[k] = k-th divided difference f[x_0 .. x_k].
    std::vector<double> d = ys;
    std::vector<double> top;
    top.push_back(d[0]);
    for (std::size_t lvl = 1; lvl < pts; ++lvl) {
        for (std::size_t i = 0; i + lvl < pts; ++i)
            d[i] = (d[i + 1] - d[i]) / (xs[i + lvl] - xs[i]);
        top.push_back(d[0]);
    }

    const double lead = top[static_cast<std::size_t>(n)];
    const double beyond = top[static_cast<std::size_t>(n) + 1];
    if (std::abs(beyond) > tol)
        throw domain_error("xm_degree: order n+1 divided difference does not vanish");
    if (std::abs(lead) <= tol)
        throw domain_error("xm_degree: degree deficiency (leading coefficient vanishes)");
    return n;
}

} // namespace nlosc::xm_jacobi
