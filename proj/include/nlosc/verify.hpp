#pragma once

#include <cstdint>
#include <vector>

#include "nlosc/oscillator.hpp"
#include "nlosc/scarf.hpp"
#include "nlosc/types.hpp"

namespace nlosc::verify {

struct QuadratureRule {
    std::vector<double> nodes;   // ascending, interior to (-1, 1)
    std::vector<double> weights; // positive, symmetric
};

// Gauss-Legendre rule of the given order on [-1, 1]. Nodes are computed by
// Newton iteration on P_order and mirrored exactly about 0, so the rule is
// bit-reproducible and integrates polynomials through degree 2*order-1.
QuadratureRule gauss_legendre(int order);

// int_0^right Psi_l Psi_n mu dx evaluated in the transformed coordinate u,
// where mu dx = du / (2 sqrt(|l|)) removes the endpoint singularity exactly:
//   (1/(2 sqrt|l|)) int_{-pi/2}^{pi/2} Psi_l(x(u)) Psi_n(x(u)) du.
// Accumulated in ascending node order (fixed summation order).
double weighted_inner_product(const oscillator::OscillatorParams& p,
                              long long l, long long n, int order);

// int_0^right mu dx by the same substitution; equals pi / (2 sqrt(|l|)).
double weight_integral(double lambda, int order);

// Gram matrix of the extended wavefunctions n_lo..n_hi under the mu-weighted
// inner product. Passes iff
//   max off-diagonal |G_ln| / sqrt(G_ll G_nn) <= tol, and
//   the coefficient of variation of G_nn / osc_norm(n) is <= tol
// (the ratio is 1/(4 |l|^(3/2)) in exact arithmetic, independent of n).
VerificationReport gram_matrix(const oscillator::OscillatorParams& p,
                               long long n_lo, long long n_hi,
                               int order, double tol = 1e-6);

// Residual of the extended oscillator equation
//   (1 - |l|x^2) Psi'' - |l| x Psi' + [2 E_n - V_ext(x)] Psi = 0
// for Psi = extended_wavefunction, E_n = extended_energy. Derivatives by
// 4th-order central differences with step 1e-4 |l|^(-1/2), on a uniform
// grid of grid_size points spanning [1e-3, 1-1e-3] * |l|^(-1/2).
// Reported value is max(|residual| / sum of term magnitudes). Passes iff
// that maximum is <= tol AND the negative control (E_n replaced by E_n + 1)
// pushes it above 1e-3.
VerificationReport ode_residual(const oscillator::OscillatorParams& p,
                                long long n, int grid_size,
                                double tol = 1e-7);

// Lowest `count` eigenvalues of the Dirichlet operator
//   -d^2/du^2 + V_scarf(u) + r(u)   on (-pi/2, pi/2),
// by the 3-point finite-difference discretization on grid_points interior
// points, with eigenvalues extracted by Sturm-sequence bisection inside
// Gershgorin bounds. Requires grid_points >= 200. Ascending order.
std::vector<double> fd_eigensolve(const scarf::ScarfParams& p,
                                  int grid_points, int count);

// Compare the finite-difference spectrum (mapped through energy_map) with
// the closed-form extended spectrum E_m..E_{m+count-1}. Passes iff every
// relative deviation is <= tol.
VerificationReport eig_compare(const oscillator::OscillatorParams& p,
                               int count, int grid_points,
                               double tol = 1e-3);

} // namespace nlosc::verify
