#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "cuem/polynomial.hpp"
#include "cuem/rational.hpp"
#include "cuem/series.hpp"

namespace cuem {

// Evaluation routes for the 2k-th derivative moment at |x| = 1. general_x is
// the off-circle formula and is dispatched separately (it needs q != 1).
enum class MomentMethod { sumofdets, laguerre_k, laguerre_n, painleve, general_x };

const char* to_string(MomentMethod m);

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// 2k-th moment of |Lambda(1)|: the product formula, exact.
BigRational charpoly_moment(long n, int k);

// Same moment as the degree-k^2 polynomial in N.
RatPolynomial charpoly_moment_poly(int k);

// Theorem-2.1 route: the alternating composition sum of binomial determinants.
// Valid for every integer N >= 0, including N < 2k, because binomial entries
// are evaluated through the polynomial product form.
BigRational deriv_moment_sumofdets(long n, int k, const ProgressFn& progress = {});

// k x k Laguerre-determinant route (|x| = 1).
BigRational deriv_moment_laguerre_k(long n, int k);

// Same route with N kept symbolic; returns the degree-(k^2+2k) polynomial.
// Intended for small k (the determinant entries carry polynomial
// coefficients).
RatPolynomial deriv_moment_laguerre_k_symbolic(int k);

// N x N dual Laguerre-determinant route (|x| = 1).
BigRational deriv_moment_laguerre_n(long n, int k);

// General-|x| bivariate determinant route; q = |x|^2, q >= 0 and q != 1.
BigRational deriv_moment_general_x(long n, int k, const BigRational& q);

// Single dispatcher used by the CLI.
BigRational deriv_moment(long n, int k, MomentMethod method, const BigRational& q = BigRational(1),
                         const ProgressFn& progress = {});

// The full moment as a polynomial in N (degree exactly k^2+2k), recovered by
// evaluating the chosen route at N = k..k+k^2+2k and interpolating exactly.
RatPolynomial deriv_moment_poly(int k, MomentMethod method = MomentMethod::sumofdets,
                                int threads = 1, const ProgressFn& progress = {});

// f(N,k): the derivative moment divided exactly by the |Lambda(1)| moment.
// Degree exactly 2k with zero constant term.
RatPolynomial f_ratio(int k, MomentMethod method = MomentMethod::sumofdets, int threads = 1,
                      const ProgressFn& progress = {});

// Leading coefficient of the derivative moment in N, from the Bessel-entry
// determinant; equals deriv_moment_poly(k).leading_coefficient().
BigRational b_k_leading(int k);

// The 2k roots of f(N,k), conjugate-closed, each with relative residual below
// residual_tol. Sorted by real part, then imaginary part.
std::vector<std::complex<double>> roots_of_f(int k, double residual_tol = 1e-10,
                                             MomentMethod method = MomentMethod::painleve);

namespace detail {

// (sign_prefix) * sum_h binom(k,h) (per_h_sign)^h N^{k-h} (k+h)! [t^{k+h}] det,
// the extraction shared by the Laguerre, dual-Laguerre and Painleve routes.
BigRational extract_moment(const TaylorSeries<BigRational>& det_series, long n, int k,
                           bool alternate_h, int sign_prefix);

}  // namespace detail

}  // namespace cuem
