#pragma once

#include <vector>

#include "cuem/polynomial.hpp"
#include "cuem/rational.hpp"

namespace cuem {

// Maclaurin coefficients c_1..c_M of f_{N,k}(t), t times the logarithmic
// derivative of the k x k Laguerre determinant, solved order by order from
// the second-order nonlinear ODE it satisfies. There is no constant term.
struct PainleveSeries {
  long n = 0;
  int k = 0;
  int truncation = 0;
  std::vector<BigRational> c;  // c[j-1] holds c_j

  const BigRational& coefficient(int j) const { return c.at(static_cast<std::size_t>(j) - 1); }
};

// Seeds c_1 = -N/2, selects the analytic branch of the (quadratic) order-2
// equation by the known value of c_2, then solves each later order. The
// order-(2k+1) equation is degenerate (0 = 0); the branch with vanishing
// odd-index coefficients is taken there, which is what the moment extraction
// (orders <= 2k only) and the printed coefficient tables both live on.
PainleveSeries painleve_coefficients(long n, int k, int truncation);

// Exact 2k-th derivative moment at |x| = 1 through the ODE route: rebuild the
// determinant series as charpoly_moment * exp(sum c_j t^j / j) and apply the
// k x k extraction.
BigRational painleve_moment(long n, int k);

// f(N,k) with painleve_moment as the evaluation engine.
RatPolynomial painleve_f_poly(int k, int threads = 1);

}  // namespace cuem
