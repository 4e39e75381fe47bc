#pragma once

#include <cstdint>

#include "nlosc/types.hpp"

namespace nlosc::scarf {

// Trigonometric Scarf well parameters on u in (-pi/2, pi/2).
struct ScarfParams {
    double a = 0.0;
    double b = 0.0;
    int m = 0; // rational-extension index; m == 0 is the plain well
};

// V(u) = ((2a^2 + 2b^2 - 1)/4) sec^2 u - ((b^2 - a^2)/2) sec u tan u.
// Throws domain_error at or beyond |u| = pi/2.
double scarf_potential(const ScarfParams& p, double u);

// Rational correction term r(u) added to the well by the extension:
//   r = -2mc - c [a + b + (a-b+1) sin u] Q + (c^2/2) cos^2 u Q^2,
// where c = a-b-m+1 and Q = P_{m-1}^(-a,b)(sin u) / P_m^(-a-1,b-1)(sin u).
// Identically 0 for m == 0. Regular on the closed interval |u| <= pi/2
// whenever the denominator polynomial has no zero in [-1, 1].
double rational_term(const ScarfParams& p, double u);

// Same correction expressed in t = sin u (cos^2 u = 1 - t^2), used as an
// independent evaluation route for cross-checks.
double rational_term_t(const ScarfParams& p, double t);

// Bound-state energy of the extended well: eps_n = ((2n - 2m + a + b + 1)/2)^2
// for n >= m. model tag is scarf for m == 0, scarf_extended otherwise.
SpectralLine scarf_energy(const ScarfParams& p, long long n);

// Unnormalized bound-state wavefunction
//   Phi_n(u) = (1 - sin u)^(a/2 + 1/4) (1 + sin u)^(b/2 + 1/4)
//              / P_m^(-a-1,b-1)(sin u) * Xm_n(sin u),
// where Xm_n is the degree-n X_m exceptional Jacobi polynomial with
// parameters (a, b). Returns exactly 0 at u = +-pi/2.
double scarf_wavefunction(const ScarfParams& p, long long n, double u);

// Closed-form normalization integral N_n = int_{-pi/2}^{pi/2} Phi_n^2 du:
//   N_n = (-1)^m pi 2^(a+b+1) (n+b) (n-2m+a+1) Gamma(n-m+a+1)
//         / [ sin((n+b) pi) (2n-2m+a+b+1) (n-m+a+1)
//             Gamma(n-m+a+b+1) Gamma(m-n-b+1) Gamma(n-m+1) ].
// At m == 0 this reduces to the classical Jacobi norm
//   2^(a+b+1) Gamma(n+a+1) Gamma(n+b+1) / ((2n+a+b+1) Gamma(n+a+b+1) n!).
// Throws domain_error on parameter combinations where a factor degenerates
// (integer b, or a vanishing rational prefactor denominator).
double scarf_norm(const ScarfParams& p, long long n);

// Parameter admissibility for a regular, nondegenerate extension:
//   (1) b != 0
//   (2) a not in {0, 1, ..., m-1}        (tolerance 1e-12)
//   (3) a - m + 2 > 0
//   (4) sign(a - m + 1) == sign(b)
// All four hold vacuously for m == 0. Never throws.
ValidationReport validate_scarf(const ScarfParams& p);

} // namespace nlosc::scarf
