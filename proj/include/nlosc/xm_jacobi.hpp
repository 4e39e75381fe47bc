#pragma once

#include <cstdint>

namespace nlosc::xm_jacobi {

// X_m exceptional Jacobi polynomial family member of degree n (n >= m).
struct XmSpec {
    long long n = 0; // degree, n >= m
    double a = 0.0;
    double b = 0.0;
    int m = 0; // codimension index; m == 0 reduces to classical Jacobi
};

// Evaluate the degree-n X_m exceptional Jacobi polynomial at t via the
// two-term classical-Jacobi representation
//   (-1)^m [ (a+b+n-m+1)/(2(a+n-m+1)) (t-1) P_m^(-a-1,b-1) P_{n-m-1}^(a+2,b)
//            + (a-m+1)/(a+n-m+1) P_m^(-a-2,b) P_{n-m}^(a+1,b-1) ],
// with P_{-1} == 0. Throws domain_error when n < m or a+n-m+1 == 0.
// For m == 0 this reduces exactly to the classical P_n^(a,b)(t).
double xm_eval(const XmSpec& spec, double t);

// Verified polynomial degree: samples n+2 Chebyshev nodes on [-1,1], forms
// divided differences, and checks that the order-(n+1) difference vanishes
// while the order-n one does not (tolerance 1e-9 scaled by the max sample).
// Throws domain_error when the family is degenerate (actual degree < n).
long long xm_degree(const XmSpec& spec);

} // namespace nlosc::xm_jacobi
