#pragma once

#include "cuem/polynomial.hpp"
#include "cuem/series.hpp"

namespace cuem {

// Generalized Laguerre polynomial L_n^(alpha) in t, from the explicit
// expansion sum_i (-1)^i binom(n+alpha, n-i) t^i / i!. Zero for n < 0; alpha
// may be negative.
RatPolynomial laguerre(int n, int alpha);

// Maclaurin coefficients of L_{N+offset}^(alpha)(t) with N symbolic: the
// coefficient of t^i is (-1)^i/i! binom(N+offset+alpha, alpha+i) as a
// polynomial in N, using binom(n+a, n-i) = binom(n+a, a+i) to pin the lower
// index. Valid as a polynomial identity for integer N with N+offset >= 0.
// Requires alpha >= 1.
TaylorSeries<RatPolynomial> laguerre_symbolic(int offset, int alpha, int degree_cap);

// Truncation of an exact polynomial in t to a series of the given order.
TaylorSeries<BigRational> polynomial_to_series(const RatPolynomial& p, int order);

}  // namespace cuem
