#include "nlosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "nlosc/errors.hpp"
#include "nlosc/specfun.hpp"

namespace nlosc::verify {

using oscillator::OscillatorParams;
using scarf::ScarfParams;

QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw domain_error("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
    rule.weights.assign(static_cast<std::size_t>(order), 0.0);

    auto eval = [order](double x, double& pn, double& dpn) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= order; ++k) {
            double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
            p0 = p1;
            p1 = pk;
        }
        pn = (order == 0) ? p0 : p1;
        dpn = static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0);
    };

    const int half = order / 2;
    for (int i = 0; i < half; ++i) {
        // i-th root from the right; mirrored exactly to keep the rule symmetric.
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
        double pn = 0.0, dpn = 1.0;
        for (int it = 0; it < 100; ++it) {
            eval(x, pn, dpn);
            double dx = pn / dpn;
            x -= dx;
            if (std::abs(dx) <= 1e-15) break;
        }
        eval(x, pn, dpn);
        const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (order % 2 == 1) {
        double pn = 0.0, dpn = 1.0;
        eval(0.0, pn, dpn);
        rule.nodes[static_cast<std::size_t>(half)] = 0.0;
        rule.weights[static_cast<std::size_t>(half)] = 2.0 / (dpn * dpn);
    }
    return rule;
}

double weighted_inner_product(const OscillatorParams& p, long long l, long long n, int order) {
    const QuadratureRule rule = gauss_legendre(order);
    const double al = -p.lambda;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double u = 0.5 * pi * rule.nodes[k];
        const double x = oscillator::map_x(u, p.lambda);
        // Grouping the two factors keeps the value bitwise symmetric in (l, n).
        acc += rule.weights[k] * (oscillator::extended_wavefunction(p, l, x) *
                                  oscillator::extended_wavefunction(p, n, x));
    }
    return acc * (0.5 * pi) / (2.0 * std::sqrt(al));
}

double weight_integral(double lambda, int order) {
    const QuadratureRule rule = gauss_legendre(order);
    const double al = -lambda;
    if (!(al > 0.0)) throw domain_error("weight_integral: lambda must be negative");
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k];
    return acc * (0.5 * pi) / (2.0 * std::sqrt(al));
}

VerificationReport gram_matrix(const OscillatorParams& p, long long n_lo, long long n_hi,
                               int order, double tol) {
    if (n_hi < n_lo) throw domain_error("gram_matrix: requires n_hi >= n_lo");
    const std::size_t dim = static_cast<std::size_t>(n_hi - n_lo + 1);

    VerificationReport rep;
    rep.kind = ReportKind::gram;
    rep.tolerance = tol;
    rep.values.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const double g = weighted_inner_product(p, n_lo + static_cast<long long>(i),
                                                    n_lo + static_cast<long long>(j), order);
            rep.values[i][j] = g;
            rep.values[j][i] = g;
        }
    }

    double max_off = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i != j)
                max_off = std::max(max_off, std::abs(rep.values[i][j]) /
                                                std::sqrt(rep.values[i][i] * rep.values[j][j]));

    // G_nn / osc_norm(n) is 1/(4 |l|^(3/2)) independent of n; its spread
    // measures quadrature and closed-form-norm consistency at once.
    double mean = 0.0;
    std::vector<double> ratios(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        ratios[i] = rep.values[i][i] / oscillator::osc_norm(p, n_lo + static_cast<long long>(i));
        mean += ratios[i];
    }
    mean /= static_cast<double>(dim);
    double var = 0.0;
    for (std::size_t i = 0; i < dim; ++i) var += (ratios[i] - mean) * (ratios[i] - mean);
    var /= static_cast<double>(dim);
    const double cv = std::sqrt(var) / std::abs(mean);

    rep.pass = max_off <= tol && cv <= tol;
    rep.metadata["lambda"] = p.lambda;
    rep.metadata["m"] = static_cast<double>(p.m);
    rep.metadata["n_lo"] = static_cast<double>(n_lo);
    rep.metadata["n_hi"] = static_cast<double>(n_hi);
    rep.metadata["order"] = static_cast<double>(order);
    rep.metadata["max_offdiag_rel"] = max_off;
    rep.metadata["diag_ratio_cv"] = cv;
    rep.metadata["diag_ratio_mean"] = mean;
    return rep;
}

VerificationReport ode_residual(const OscillatorParams& p, long long n, int grid_size, double tol) {
    if (grid_size < 10) throw domain_error("ode_residual: grid_size must be >= 10");
    const double right = oscillator::domain_right(p.lambda);
    const double al = -p.lambda;
    const double E = oscillator::extended_energy(p, n).energy;
    // The solution decays like (1 - |lambda| x^2)^(1/4 + a/2) with a up to ~20
    // for the reference sets, so near the right endpoint it varies on the
    // length scale of the distance to the boundary. The stencil step follows
    // that scale: a wide step away from the ends keeps second-difference
    // rounding noise small, and the proportional shrink toward either end
    // keeps the 4th-order truncation below ~1e-8 inside the 2% guard band.
    const double h_cap = 2e-4 * right;
    const double lo = 0.02 * right;
    const double hi = 0.98 * right;

    double max_rel = 0.0;
    double max_rel_control = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        const double h = std::min(h_cap, 3e-3 * std::min(x, right - x));
        double psi[5];
        for (int j = -2; j <= 2; ++j)
            psi[j + 2] = oscillator::extended_wavefunction(p, n, x + static_cast<double>(j) * h);
        const double d2 = (-psi[0] + 16.0 * psi[1] - 30.0 * psi[2] + 16.0 * psi[3] - psi[4]) /
                          (12.0 * h * h);
        const double d1 = (psi[0] - 8.0 * psi[1] + 8.0 * psi[3] - psi[4]) / (12.0 * h);
        const double vext = oscillator::extended_potential(p, x);

        const double t1 = (1.0 - al * x * x) * d2;
        const double t2 = -al * x * d1;
        const double t3 = (2.0 * E - vext) * psi[2];
        const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + 1e-300;
        max_rel = std::max(max_rel, std::abs(t1 + t2 + t3) / scale);

        const double t3c = (2.0 * (E + 1.0) - vext) * psi[2];
        const double scale_c = std::abs(t1) + std::abs(t2) + std::abs(t3c) + 1e-300;
        max_rel_control = std::max(max_rel_control, std::abs(t1 + t2 + t3c) / scale_c);
    }

    VerificationReport rep;
    rep.kind = ReportKind::residual;
    rep.tolerance = tol;
    rep.columns = {"n", "max_rel_residual", "control_rel_residual"};
    rep.values = {{static_cast<double>(n), max_rel, max_rel_control}};
    rep.pass = max_rel <= tol && max_rel_control > 1e-3;
    rep.metadata["lambda"] = p.lambda;
    rep.metadata["m"] = static_cast<double>(p.m);
    rep.metadata["n"] = static_cast<double>(n);
    rep.metadata["grid_size"] = static_cast<double>(grid_size);
    rep.metadata["fd_step"] = h_cap;
    rep.metadata["energy"] = E;
    rep.metadata["control_threshold"] = 1e-3;
    return rep;
}

namespace {

// Sturm count: number of eigenvalues of the tridiagonal operator below x.
// d holds the diagonal, off2 the squared off-diagonal element.
int sturm_count(const std::vector<double>& d, double off2, double x) {
    int cnt = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - off2 / q;
        if (q == 0.0) q = 1e-300;
        if (q < 0.0) ++cnt;
    }
    return cnt;
}

} // namespace

std::vector<double> fd_eigensolve(const ScarfParams& p, int grid_points, int count) {
    if (grid_points < 200) throw domain_error("fd_eigensolve: grid_points must be >= 200");
    if (count < 1 || count > grid_points)
        throw domain_error("fd_eigensolve: count must lie in [1, grid_points]");

    const int N = grid_points;
    const double h = pi / (static_cast<double>(N) + 1.0);
    const double off = -1.0 / (h * h);
    const double off2 = off * off;

    std::vector<double> d(static_cast<std::size_t>(N), 0.0);
    for (int i = 0; i < N; ++i) {
        const double u = -0.5 * pi + (static_cast<double>(i) + 1.0) * h;
        d[static_cast<std::size_t>(i)] =
            2.0 / (h * h) + scarf::scarf_potential(p, u) + scarf::rational_term(p, u);
    }

    // Gershgorin bounds; the first and last rows have a single off-diagonal.
    double glo = d[0] - std::abs(off);
    double ghi = d[0] + std::abs(off);
    for (int i = 0; i < N; ++i) {
        const double r = ((i == 0 || i == N - 1) ? 1.0 : 2.0) * std::abs(off);
        glo = std::min(glo, d[static_cast<std::size_t>(i)] - r);
        ghi = std::max(ghi, d[static_cast<std::size_t>(i)] + r);
    }

    std::vector<double> eig(static_cast<std::size_t>(count), 0.0);
    for (int j = 0; j < count; ++j) {
        double lo = glo;
        double hi = ghi;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(d, off2, mid) >= j + 1) hi = mid;
            else lo = mid;
            if (hi - lo <= 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) break;
        }
        eig[static_cast<std::size_t>(j)] = 0.5 * (lo + hi);
    }
    return eig;
}

VerificationReport eig_compare(const OscillatorParams& p, int count, int grid_points, double tol) {
    if (count < 1) throw domain_error("eig_compare: count must be >= 1");
    const ScarfParams sp{oscillator::family_a(p.lambda, p.m), 0.5, p.m};
    const std::vector<double> eps = fd_eigensolve(sp, grid_points, count);

    VerificationReport rep;
    rep.kind = ReportKind::eigencompare;
    rep.tolerance = tol;
    rep.columns = {"n", "E_closed", "E_fd", "rel_dev"};
    rep.pass = true;
    double max_dev = 0.0;
    for (int j = 0; j < count; ++j) {
        const long long n = static_cast<long long>(p.m) + j;
        const double e_cl = oscillator::extended_energy(p, n).energy;
        const double e_fd = oscillator::energy_map(eps[static_cast<std::size_t>(j)], p.lambda);
        const double rel = std::abs(e_fd - e_cl) / std::abs(e_cl);
        max_dev = std::max(max_dev, rel);
        rep.values.push_back({static_cast<double>(n), e_cl, e_fd, rel});
        rep.pass = rep.pass && rel <= tol;
    }
    rep.metadata["lambda"] = p.lambda;
    rep.metadata["m"] = static_cast<double>(p.m);
    rep.metadata["count"] = static_cast<double>(count);
    rep.metadata["grid_points"] = static_cast<double>(grid_points);
    rep.metadata["max_rel_dev"] = max_dev;
    return rep;
}

} // namespace nlosc::verify
