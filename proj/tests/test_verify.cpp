#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "nlosc/errors.hpp"
#include "nlosc/oscillator.hpp"
#include "nlosc/scarf.hpp"
#include "nlosc/specfun.hpp"
#include "nlosc/verify.hpp"

using namespace nlosc;
using namespace nlosc::verify;
using nlosc::oscillator::OscillatorParams;
using nlosc::scarf::ScarfParams;

TEST_CASE("quadrature rule basics") {
    QuadratureRule r1 = gauss_legendre(1);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(r1.nodes[0] == 0.0);
    CHECK(r1.weights[0] == 2.0);

    QuadratureRule r2 = gauss_legendre(2);
    CHECK(std::abs(r2.nodes[1] - 1.0 / std::sqrt(3.0)) <= 1e-15);
    CHECK(std::abs(r2.weights[0] - 1.0) <= 1e-15);
    CHECK(std::abs(r2.weights[1] - 1.0) <= 1e-15);

    // order 3 integrates x^4 exactly: 2/5
    QuadratureRule r3 = gauss_legendre(3);
    double acc = 0.0;
    for (std::size_t i = 0; i < r3.nodes.size(); ++i)
        acc += r3.weights[i] * std::pow(r3.nodes[i], 4);
    CHECK(std::abs(acc - 0.4) <= 1e-14);

    CHECK_THROWS_AS(gauss_legendre(0), domain_error);
}

TEST_CASE("quadrature exactness up to degree 2n-1") {
    for (int order : {4, 8, 16, 31}) {
        QuadratureRule r = gauss_legendre(order);
        for (int k = 0; k <= 2 * order - 1; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                acc += r.weights[i] * std::pow(r.nodes[i], k);
            double want = (k % 2 == 0) ? 2.0 / (static_cast<double>(k) + 1.0) : 0.0;
            CAPTURE(order);
            CAPTURE(k);
            CHECK(std::abs(acc - want) <= 1e-13);
        }
    }
}

TEST_CASE("quadrature rule is exactly symmetric") {
    for (int order : {8, 9, 64, 129}) {
        QuadratureRule r = gauss_legendre(order);
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            CHECK(r.nodes[i] == -r.nodes[r.nodes.size() - 1 - i]);
            CHECK(r.weights[i] == r.weights[r.nodes.size() - 1 - i]);
        }
        if (order % 2 == 1) CHECK(r.nodes[static_cast<std::size_t>(order / 2)] == 0.0);
    }
}

TEST_CASE("integral of the measure") {
    for (double lambda : {-0.05, -0.1, -0.2, -0.65, -5.0}) {
        double want = pi / (2.0 * std::sqrt(-lambda));
        CAPTURE(lambda);
        CHECK(std::abs(weight_integral(lambda, 128) - want) <= 1e-12 * want);
    }
}

TEST_CASE("inner products converge spectrally in the quadrature order") {
    OscillatorParams p{-0.1, 1};
    double v64 = weighted_inner_product(p, 1, 1, 64);
    double v96 = weighted_inner_product(p, 1, 1, 96);
    double v128 = weighted_inner_product(p, 1, 1, 128);
    CHECK(std::abs(v96 - v128) <= 1e-10 * std::abs(v128));
    CHECK(std::abs(v64 - v128) <= 1e-8 * std::abs(v128));
}

TEST_CASE("inner product symmetry is bitwise") {
    OscillatorParams p{-0.1, 1};
    CHECK(weighted_inner_product(p, 1, 2, 96) == weighted_inner_product(p, 2, 1, 96));
}

TEST_CASE("orthogonality reports for the reference sets") {
    struct Set {
        double lambda;
        int m;
        long long n_lo, n_hi;
    };
    for (const Set& s : {Set{-0.1, 1, 1, 5}, Set{-0.2, 3, 3, 6}, Set{-0.5, 0, 0, 4}}) {
        OscillatorParams p{s.lambda, s.m};
        VerificationReport rep = gram_matrix(p, s.n_lo, s.n_hi, 128, 1e-6);
        CAPTURE(s.lambda);
        CHECK(rep.kind == ReportKind::gram);
        CHECK(rep.pass);
        CHECK(rep.metadata.at("max_offdiag_rel") <= 1e-6);
        CHECK(rep.metadata.at("diag_ratio_cv") <= 1e-6);
        // G_nn / N_n = 1/(4 |l|^(3/2))
        double want = 1.0 / (4.0 * std::pow(-s.lambda, 1.5));
        CHECK(std::abs(rep.metadata.at("diag_ratio_mean") - want) <= 1e-8 * want);
        // matrix shape and symmetry
        std::size_t dim = static_cast<std::size_t>(s.n_hi - s.n_lo + 1);
        REQUIRE(rep.values.size() == dim);
        for (std::size_t i = 0; i < dim; ++i) {
            REQUIRE(rep.values[i].size() == dim);
            for (std::size_t j = 0; j < dim; ++j) CHECK(rep.values[i][j] == rep.values[j][i]);
        }
    }
}

TEST_CASE("gram entries equal individual inner products and rebuild identically") {
    OscillatorParams p{-0.1, 1};
    VerificationReport rep = gram_matrix(p, 1, 3, 96, 1e-6);
    CHECK(rep.values[0][1] == weighted_inner_product(p, 1, 2, 96));
    CHECK(rep.values[2][2] == weighted_inner_product(p, 3, 3, 96));
    VerificationReport again = gram_matrix(p, 1, 3, 96, 1e-6);
    for (std::size_t i = 0; i < rep.values.size(); ++i)
        for (std::size_t j = 0; j < rep.values.size(); ++j)
            CHECK(rep.values[i][j] == again.values[i][j]);
}

TEST_CASE("differential equation residuals for the reference sets") {
    struct Set {
        double lambda;
        int m;
        long long n;
    };
    for (const Set& s : {Set{-0.05, 1, 1}, Set{-0.05, 1, 3}, Set{-5.0, 1, 1}, Set{-5.0, 1, 3},
                         Set{-0.65, 2, 2}, Set{-0.65, 2, 4}, Set{-0.1, 0, 0}, Set{-0.1, 1, 1},
                         Set{-0.1, 3, 3}, Set{-0.1, 5, 5}, Set{-0.2, 3, 3}, Set{-0.2, 3, 5}}) {
        OscillatorParams p{s.lambda, s.m};
        VerificationReport rep = ode_residual(p, s.n, 400, 1e-7);
        CAPTURE(s.lambda);
        CAPTURE(s.m);
        CAPTURE(s.n);
        CHECK(rep.kind == ReportKind::residual);
        CHECK(rep.pass);
        REQUIRE(rep.values.size() == 1);
        REQUIRE(rep.values[0].size() == 3);
        CHECK(rep.values[0][0] == static_cast<double>(s.n));
        CHECK(rep.values[0][1] <= 1e-7);         // satisfied at the closed-form energy
        CHECK(rep.values[0][2] > 1e-3);          // detached at the shifted energy
    }
    CHECK_THROWS_AS(ode_residual({-0.1, 1, {}}, 1, 5, 1e-7), domain_error);
}

TEST_CASE("finite-difference eigensolver on the free box") {
    // a = b = 1/2 with m = 0 makes the well vanish; levels are (n+1)^2.
    std::vector<double> eig = fd_eigensolve({0.5, 0.5, 0}, 2000, 5);
    for (int n = 0; n < 5; ++n) {
        double want = static_cast<double>((n + 1) * (n + 1));
        CAPTURE(n);
        CHECK(std::abs(eig[static_cast<std::size_t>(n)] - want) <= 1e-4 * want);
    }
    CHECK_THROWS_AS(fd_eigensolve({0.5, 0.5, 0}, 100, 3), domain_error);
    CHECK_THROWS_AS(fd_eigensolve({0.5, 0.5, 0}, 2000, 0), domain_error);
}

TEST_CASE("finite-difference spectrum matches the closed form") {
    ScarfParams sp{9.5, 0.5, 1};
    std::vector<double> eig = fd_eigensolve(sp, 2000, 4);
    for (int j = 0; j < 4; ++j) {
        double want = scarf::scarf_energy(sp, 1 + j).energy;
        CAPTURE(j);
        CHECK(std::abs(eig[static_cast<std::size_t>(j)] - want) <= 1e-3 * want);
    }
}

TEST_CASE("finite-difference convergence is second order") {
    ScarfParams sp{9.5, 0.5, 1};
    std::vector<double> e1 = fd_eigensolve(sp, 1000, 3);
    std::vector<double> e2 = fd_eigensolve(sp, 2000, 3);
    const double h1 = pi / 1001.0;
    const double h2 = pi / 2001.0;
    for (int j = 0; j < 3; ++j) {
        double exact = scarf::scarf_energy(sp, 1 + j).energy;
        double err1 = std::abs(e1[static_cast<std::size_t>(j)] - exact);
        double err2 = std::abs(e2[static_cast<std::size_t>(j)] - exact);
        double order = std::log(err1 / err2) / std::log(h1 / h2);
        CAPTURE(j);
        CHECK(order > 1.8);
        CHECK(order < 2.2);
    }
}

TEST_CASE("eigenvalue comparison reports") {
    struct Set {
        double lambda;
        int m;
        int count;
    };
    for (const Set& s : {Set{-0.2, 3, 3}, Set{-0.1, 1, 4}, Set{-0.5, 0, 3}}) {
        OscillatorParams p{s.lambda, s.m};
        VerificationReport rep = eig_compare(p, s.count, 2000, 1e-3);
        CAPTURE(s.lambda);
        CHECK(rep.kind == ReportKind::eigencompare);
        CHECK(rep.pass);
        CHECK(rep.metadata.at("max_rel_dev") <= 1e-3);
        REQUIRE(rep.values.size() == static_cast<std::size_t>(s.count));
        for (int j = 0; j < s.count; ++j) {
            const auto& row = rep.values[static_cast<std::size_t>(j)];
            REQUIRE(row.size() == 4);
            CHECK(row[0] == static_cast<double>(s.m + j));
            CHECK(row[1] == oscillator::extended_energy(p, s.m + j).energy);
            CHECK(std::abs(row[3] - std::abs(row[2] - row[1]) / std::abs(row[1])) <= 1e-16);
        }
    }
    CHECK_THROWS_AS(eig_compare({-0.1, 1, {}}, 3, 100, 1e-3), domain_error);
}

TEST_CASE("eigenvalue comparison outside the principal interval") {
    // lambda = -5, m = 1: the induced well has a subcritical attractive
    // boundary singularity, which drags the discretization down to fractional
    // convergence order (~0.6 observed). The solver still heads to 17/2 for
    // the lowest level; allow the larger discretization error and require the
    // deviation to shrink when the grid is refined.
    OscillatorParams p{-5.0, 1};
    VerificationReport rep = eig_compare(p, 2, 2000, 5e-3);
    CHECK(rep.pass);
    CHECK(std::abs(rep.values[0][1] - 8.5) <= 1e-12);
    VerificationReport fine = eig_compare(p, 2, 4000, 5e-3);
    CHECK(fine.values[0][3] < rep.values[0][3]);
    CHECK(fine.values[1][3] < rep.values[1][3]);
}
