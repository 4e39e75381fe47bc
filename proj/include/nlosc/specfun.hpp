#pragma once

#include <cstdint>

namespace nlosc {

inline constexpr double pi = 3.141592653589793238462643383279502884;

namespace specfun {

// sin(pi*x) / cos(pi*x) with the argument reduced exactly in x,
// so half-integer and integer x give full-precision results.
double sinpi(double x);
double cospi(double x);

// Gamma function on the reals, Lanczos g = 607/128 with 15 coefficients,
// reflection formula for x < 1/2. Throws domain_error within 1e-12 of a
// nonpositive integer.
double gamma(double x);

// Generalized binomial coefficient C(p, k) = p(p-1)...(p-k+1)/k! for real p,
// integer k >= 0. C(p, 0) == 1. Product accumulated in ascending k order.
double gen_binomial(double p, long long k);

struct JacobiSpec {
    long long degree = 0; // -1 denotes the zero polynomial
    double alpha = 0.0;
    double beta = 0.0;
};

// Jacobi polynomial P_n^(alpha,beta)(x) for arbitrary real parameters,
// evaluated by the finite sum
//   2^-n * sum_k C(n+alpha, k) C(n+beta, n-k) (x-1)^(n-k) (x+1)^k,
// which has no poles at negative integer parameters. degree -1 returns 0.
double jacobi_eval(const JacobiSpec& spec, double x);

// d/dx P_n^(alpha,beta)(x) = ((n+alpha+beta+1)/2) P_{n-1}^(alpha+1,beta+1)(x).
// degree <= 0 returns 0.
double jacobi_derivative(const JacobiSpec& spec, double x);

// Gauss hypergeometric 2F1(a, b; c; z) by direct series summation.
// Terminates exactly when a or b is a nonpositive integer (within 1e-12);
// otherwise requires |z| < 1 and sums until the relative term magnitude
// drops below 1e-16, throwing convergence_error past 100000 terms.
double hyp2f1(double a, double b, double c, double z);

// Associated Legendre function of the first kind, real degree nu and
// order mu, for x in (-1, 1):
//   P_nu^mu(x) = [((1+x)/(1-x))^(mu/2) / Gamma(1-mu)]
//                * 2F1(-nu, nu+1; 1-mu; (1-x)/2).
// Throws domain_error when 1-mu is a nonpositive integer.
double legendre_p(double nu, double mu, double x);

} // namespace specfun
} // namespace nlosc
