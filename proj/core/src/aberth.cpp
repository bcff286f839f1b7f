#include "cuem/aberth.hpp"

#include <cmath>

#include "cuem/errors.hpp"

namespace cuem {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (std::size_t i = c.size(); i-- > 1;)
    acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(std::vector<cplx> c, double tol,
                                               int max_iterations) {
  while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
  if (c.size() <= 1) throw validation_error("root finding needs a polynomial of degree >= 1");

  std::vector<cplx> roots;
  std::size_t valuation = 0;
  while (valuation < c.size() - 1 && c[valuation] == cplx(0.0)) ++valuation;
  roots.assign(valuation, cplx(0.0));
  if (valuation > 0) c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(valuation));

  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  const cplx lead = c.back();
  for (auto& ci : c) ci /= lead;

  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  const double radius = 1.0 + bound;

  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    z[i] = radius * cplx(std::cos(angle), std::sin(angle));
  }

  for (int iter = 0; iter < max_iterations; ++iter) {
    double max_update = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx p = horner(c, z[i]);
      const cplx dp = horner_derivative(c, z[i]);
      if (p == cplx(0.0)) continue;
      cplx w = (dp == cplx(0.0)) ? cplx(1e-12, 1e-12) : p / dp;
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const cplx diff = z[i] - z[j];
        if (diff == cplx(0.0)) continue;
        repulsion += 1.0 / diff;
      }
      const cplx denom = 1.0 - w * repulsion;
      const cplx step = (denom == cplx(0.0)) ? w : w / denom;
      z[i] -= step;
      max_update = std::max(max_update, std::abs(step));
    }
    if (max_update < tol) {
      // A couple of Newton polish steps tighten the residuals.
      for (std::size_t i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s) {
          const cplx dp = horner_derivative(c, z[i]);
          if (dp == cplx(0.0)) break;
          z[i] -= horner(c, z[i]) / dp;
        }
      roots.insert(roots.end(), z.begin(), z.end());
      return roots;
    }
  }
  throw root_finding_failure();
}

double relative_residual(const std::vector<cplx>& c, cplx z) {
  double scale = 0.0, zp = 1.0;
  const double az = std::abs(z);
  for (const auto& ci : c) {
    scale += std::abs(ci) * zp;
    zp *= az;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(horner(c, z)) / scale;
}

}  // namespace cuem
