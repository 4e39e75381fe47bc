#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "nlosc/errors.hpp"
#include "nlosc/specfun.hpp"
#include "nlosc/xm_jacobi.hpp"

using namespace nlosc;
using namespace nlosc::xm_jacobi;
using specfun::jacobi_eval;

namespace {

bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

} // namespace

TEST_CASE("m = 0 reduces exactly to the classical Jacobi polynomial") {
    for (long long n = 0; n <= 8; ++n)
        for (double t : {-0.9, -0.2, 0.3, 0.8}) {
            double xm = xm_eval({n, 9.5, 0.5, 0}, t);
            double cl = jacobi_eval({n, 9.5, 0.5}, t);
            CAPTURE(n);
            CAPTURE(t);
            CHECK(rel_close(xm, cl, 1e-13));
        }
}

TEST_CASE("lowest member n = m has the closed form (-1)^m (a-m+1)/(a+1) P_m^(-a-2,b)") {
    for (int m : {1, 2, 3, 5}) {
        const double a = 9.5, b = 0.5;
        for (double t : {-0.7, 0.0, 0.4, 0.95}) {
            double want = ((m % 2) ? -1.0 : 1.0) * (a - m + 1.0) / (a + 1.0) *
                          jacobi_eval({m, -a - 2.0, b}, t);
            CAPTURE(m);
            CAPTURE(t);
            CHECK(rel_close(xm_eval({m, a, b, m}, t), want, 1e-12));
        }
    }
}

TEST_CASE("pinned low-degree members at a = 19/2, b = 1/2") {
    // degree 1, m = 1: 38/7 + (57/14) t
    for (double t : {-1.0, -0.25, 0.0, 0.6, 1.0}) {
        double want = 38.0 / 7.0 + 57.0 / 14.0 * t;
        CHECK(rel_close(xm_eval({1, 9.5, 0.5, 1}, t), want, 1e-13));
    }
    // degree 3, m = 3: 5 (10 t^3 + 72 t^2 + 149 t + 92) / 16
    for (double t : {-1.0, -0.4, 0.1, 0.8}) {
        double want = 5.0 * (10.0 * t * t * t + 72.0 * t * t + 149.0 * t + 92.0) / 16.0;
        CHECK(rel_close(xm_eval({3, 9.5, 0.5, 3}, t), want, 1e-13));
    }
}

TEST_CASE("xm_eval argument checking") {
    CHECK_THROWS_AS(xm_eval({0, 2.0, 0.5, 1}, 0.3), domain_error); // n < m
    CHECK_THROWS_AS(xm_eval({2, 2.0, 0.5, -1}, 0.3), domain_error);
    // a + n - m + 1 == 0
    CHECK_THROWS_AS(xm_eval({3, -3.0, 0.5, 1}, 0.3), domain_error);
}

TEST_CASE("xm_degree validates the polynomial degree") {
    CHECK(xm_degree({1, 9.5, 0.5, 1}) == 1);
    CHECK(xm_degree({4, 9.5, 0.5, 2}) == 4);
    CHECK(xm_degree({0, 4.5, 0.5, 0}) == 0);
    CHECK(xm_degree({6, 9.5, 0.5, 3}) == 6);
    CHECK(xm_degree({7, 4.5, 0.5, 2}) == 7);
    CHECK(xm_degree({5, 19.5, 0.5, 1}) == 5);
}

TEST_CASE("xm_degree throws on a degenerate family (leading coefficient vanishes)") {
    // a = 2 lies in {0, ..., m-1} for m = 3: the family degenerates and the
    // actual degree drops below n.
    CHECK_THROWS_AS(xm_degree({3, 2.0, 0.5, 3}), domain_error);
    // a = 2m + b - 2 zeroes the leading binomial of both constituent Jacobi
    // factors, so the t^n coefficient vanishes identically and the true
    // degree is n - 1.
    CHECK_THROWS_AS(xm_degree({6, 4.5, 0.5, 3}), domain_error);
}

TEST_CASE("orthogonal-family recursion sanity: consecutive members are linearly independent") {
    // Evaluate a small Wronskian-like determinant at two points; it must not
    // vanish for a nondegenerate family.
    const XmSpec s1{1, 9.5, 0.5, 1};
    const XmSpec s2{2, 9.5, 0.5, 1};
    double d = xm_eval(s1, 0.2) * xm_eval(s2, 0.7) - xm_eval(s1, 0.7) * xm_eval(s2, 0.2);
    CHECK(std::abs(d) > 1e-8);
}
