#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "nlosc/rational.hpp"
#include "nlosc/scarf.hpp"
#include "nlosc/types.hpp"

namespace nlosc::oscillator {

// Nonlinear oscillator with position-dependent mass mu(x) = (1 - |l| x^2)^(-1/2)
// on the open interval D = (0, |l|^(-1/2)), lambda < 0.
struct OscillatorParams {
    double lambda = -1.0;
    int m = 0; // rational-extension index; m == 0 is the conventional model
    std::optional<Rational> lambda_exact{}; // set when lambda was given as p/q
};

// Right endpoint |lambda|^(-1/2) of the classically allowed interval.
double domain_right(double lambda);

// Point transformation u(x) = -pi/2 + 2 asin(sqrt(|l|) x), a bijection
// [0, |l|^(-1/2)] -> [-pi/2, pi/2], and its inverse. Throws outside the
// closed domain.
double map_u(double x, double lambda);
double map_x(double u, double lambda);

// Scarf parameters induced by the transformation:
//   a = (1/2) |(lambda + 2)/lambda|,  b = 1/2.
std::pair<double, double> param_map(double lambda);

// Wavefunction-family parameter. For m >= 1 the admissible family uses the
// absolute value a = (1/2)|(l+2)/l|; for m == 0 the signed value
// a = 1/|l| - 1/2 selects the branch that coincides with the conventional
// solutions for every lambda < 0 (the two agree on -2 < lambda < 0).
double family_a(double lambda, int m);

// Energy correspondence between the oscillator level E and the Scarf-side
// eigenvalue eps:
//   eps = E/(2|l|) + 1/(4 l^2) - 1/(4|l|),
//   E   = 2|l| (eps - 1/(4 l^2) + 1/(4|l|)).
double energy_map(double eps, double lambda);
double energy_map_inverse(double E, double lambda);

// Conventional potential V(x) = (1 - |l|) x^2 / (1 - |l| x^2) on [0, right).
double conventional_potential(double lambda, double x);

// Extended potential V_ext(x) = V(x) + 4 |l| r(u(x)), with r the Scarf-side
// rational correction under param_map. Evaluated through two independent
// routes (polynomials in t = 2|l|x^2 - 1, and trigonometric functions of
// u(x)); throws convergence_error if they disagree beyond 1e-10 relative.
double extended_potential(const OscillatorParams& p, double x);

// Conventional spectrum E_n = (|l|/2)(2n+1)^2 + 2n + 3/2, n >= 0.
SpectralLine conventional_energy(double lambda, long long n);

// Extended spectrum for n >= m. For m == 0 it equals the conventional
// spectrum; for m >= 1 it is the energy_map image of the Scarf eigenvalue
// under param_map, which on -2 < lambda < 0 simplifies to
//   E_n = (|l|/2)(2n - 2m + 1)^2 + 2(n - m) + 3/2.
SpectralLine extended_energy(const OscillatorParams& p, long long n);

// Unnormalized conventional wavefunction (independent associated-Legendre
// representation, used for cross-validation of the m == 0 extended family):
//   Psi_n(x) = (1 - |l| x^2)^(1/4) P_nu^mu(-sqrt(|l|) x),
//   mu = 1/lambda + 1/2,  nu = -2n + 1/lambda - 3/2.
double conventional_wavefunction(double lambda, long long n, double x);

// Unnormalized extended wavefunction for n >= m:
//   Psi_n(x) = x (2 - 2|l|x^2)^(1/4 + a/2) / P_m^(-a-1,-1/2)(t) * Xm_n(t),
// with t = 2|l|x^2 - 1 and a = family_a(lambda, m). Returns exactly 0 at
// x = 0 and x = |l|^(-1/2).
double extended_wavefunction(const OscillatorParams& p, long long n, double x);

// Integration weight mu(x) = (1 - |l| x^2)^(-1/2); int_0^right mu dx is
// finite and equals pi / (2 sqrt(|l|)).
double weight(double lambda, double x);

// Closed-form norm of the unnormalized extended wavefunction in the
// transformed coordinate: osc_norm = scarf_norm under (family_a, 1/2, m).
// The physical norm int Psi_n^2 mu dx equals osc_norm / (4 |l|^(3/2)),
// so the ratio of the two is independent of n.
double osc_norm(const OscillatorParams& p, long long n);

// Parameter regularity for the extended model:
//   (1) |lambda| != 2/(2L-1) for L = 1..m (exact when lambda_exact is set,
//       tolerance 1e-12 otherwise),
//   (2) m <= 1: lambda < 0;  m > 1: 2/(1-2m) < lambda < 0 (open interval,
//       boundary rejected exactly for rational input),
//   (3) the induced Scarf parameters pass validate_scarf.
// Never throws.
ValidationReport validate_params(const OscillatorParams& p);

} // namespace nlosc::oscillator
