#pragma once

#include <complex>
#include <vector>

namespace cuem {

// All roots of a polynomial given by ascending complex coefficients, via
// Aberth-Ehrlich simultaneous iteration (initial guesses on a Cauchy-bound
// circle, convergence when the largest update falls under tol, cap 200
// iterations). Exact zero leading coefficients are trimmed and exact zero
// trailing coefficients are deflated to roots at the origin first.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> ascending,
                                               double tol = 1e-12, int max_iterations = 200);

// |p(z)| relative to the coefficient magnitude at z, for residual checks.
double relative_residual(const std::vector<std::complex<double>>& ascending,
                         std::complex<double> z);

}  // namespace cuem
