#pragma once

#include <complex>

#include "cuem/rational.hpp"

namespace cuem {

// Exact 2k-th derivative moment over U(2) at |x|^2 = q:
// sum_m binom(k,m)^2 (4q)^m binom(2k-2m, k-m) / (k-m+1). At q = 0 only m = 0
// survives and the value is the Catalan number.
BigRational u2_moment_sum(int k, const BigRational& q);

// The same moment as binom(2k,k)/(k+1) * 3F2(-1-k, -k, -k; 1, 1/2-k; q).
BigRational u2_moment_3f2(int k, const BigRational& q);

// Real-exponent form 2^{2k} |x|^{2k} 3F2(1/2, -k, -k; 1, 2; |x|^{-2}),
// valid for |x| > 1, extending to |x| = 1 when k > -1.
double u2_moment_real_k(double k, double x_abs);

// Analytic continuation of the same expression to 0 < |x| < 1, where the 3F2
// argument exceeds 1: the hypergeometric ODE is integrated along a complex
// path around the branch point at 1. Complex-valued in general.
std::complex<double> u2_moment_real_k_continued(double k, double x_abs);

// The binomial form of the moment carried to real k:
// binom(2k,k)/(k+1) * 3F2(-1-k, -k, -k; 1, 1/2-k; |x|^2), summed directly for
// |x| <= 1 and continued through the complex plane for |x| > 1. Off integer k
// this is a different function from the moment; the two disagree, which is
// the point of comparing them.
std::complex<double> u2_moment_real_k_binomial(double k, double x_abs);

// Average of log|Lambda'(r)| over U(2) for 0 <= r < 1; value -1/2 at r = 0.
double u2_log_moment(double r);

// Mean number of zeros of Lambda' with modulus <= u at N = 2:
// (2u sqrt(1-u^2) + arccos(1-2u^2)) / pi.
double u2_mean_zero_count(double u);

}  // namespace cuem
