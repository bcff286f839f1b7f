#include "cuem/n2.hpp"

#include <array>
#include <cmath>

#include "cuem/binomial.hpp"
#include "cuem/errors.hpp"
#include "cuem/hyp3f2.hpp"

namespace cuem {

BigRational u2_moment_sum(int k, const BigRational& q) {
  if (k < 0) throw validation_error("k must be non-negative");
  if (q.sign() < 0) throw validation_error("q = |x|^2 must be non-negative");
  BigRational sum(0);
  for (int m = 0; m <= k; ++m) {
    const BigRational b = generalized_binomial(static_cast<long>(k), static_cast<unsigned>(m));
    sum += b * b * pow(BigRational(4) * q, m) *
           generalized_binomial(static_cast<long>(2 * (k - m)), static_cast<unsigned>(k - m)) /
           BigRational(k - m + 1);
  }
  return sum;
}

BigRational u2_moment_3f2(int k, const BigRational& q) {
  if (k < 0) throw validation_error("k must be non-negative");
  if (q.sign() < 0) throw validation_error("q = |x|^2 must be non-negative");
  const BigRational catalan =
      generalized_binomial(2L * k, static_cast<unsigned>(k)) / BigRational(k + 1);
  return catalan * hyp3f2_exact(BigRational(-1 - k), BigRational(-k), BigRational(-k),
                                BigRational(1), BigRational(1, 2) - BigRational(k), q);
}

double u2_moment_real_k(double k, double x_abs) {
  if (x_abs < 1.0)
    throw validation_error(
        "the real-k formula needs |x| >= 1; use the continued variant inside the circle");
  if (x_abs == 1.0 && k <= -1.0) {
    const double margin = 2.5 + 2.0 * k;
    if (margin <= 0.0) throw convergence_condition_violated(margin);
    throw validation_error("at |x| = 1 the moment needs k > -1");
  }
  const double z = 1.0 / (x_abs * x_abs);
  return std::pow(2.0 * x_abs, 2.0 * k) * hyp3f2_numeric(0.5, -k, -k, 1.0, 2.0, z);
}

namespace {

using cplx = std::complex<double>;
using state = std::array<cplx, 3>;  // (w, w', w'')

// 3F2(a1,a2,a3; b1, b2; z) satisfies, with beta_i = b_i - 1 and e1, e2, e3
// the elementary symmetric functions of the upper parameters,
//   z^2 (1-z) w''' + z [(3+beta1+beta2) - (3+e1) z] w''
//     + [(1+beta1+beta2+beta1*beta2) - (1+e1+e2) z] w' - e3 w = 0.
struct HypOde {
  double e1, e2, e3;
  double c2, c1;  // (3+beta1+beta2) and (1+beta1+beta2+beta1*beta2)

  state derivative(cplx z, const state& y) const {
    const cplx wppp = (e3 * y[0] - (c1 - (1.0 + e1 + e2) * z) * y[1] -
                       z * (c2 - (3.0 + e1) * z) * y[2]) /
                      (z * z * (1.0 - z));
    return {y[1], y[2], wppp};
  }
};

HypOde make_ode(double a1, double a2, double a3, double b1, double b2) {
  const double beta1 = b1 - 1.0, beta2 = b2 - 1.0;
  return {a1 + a2 + a3,
          a1 * a2 + a1 * a3 + a2 * a3,
          a1 * a2 * a3,
          3.0 + beta1 + beta2,
          1.0 + beta1 + beta2 + beta1 * beta2};
}

state series_seed(double a1, double a2, double a3, double b1, double b2, double z0) {
  double w = 0.0, wp = 0.0, wpp = 0.0;
  double term = 1.0;  // c_n z0^n
  for (int n = 0; n < 500; ++n) {
    const double dn = static_cast<double>(n);
    w += term;
    if (n >= 1) wp += term * dn / z0;
    if (n >= 2) wpp += term * dn * (dn - 1.0) / (z0 * z0);
    term *= (a1 + dn) * (a2 + dn) * (a3 + dn) / ((1.0 + dn) * (b1 + dn) * (b2 + dn)) * z0;
    if (std::abs(term) < 1e-20 * (std::abs(w) + 1.0)) break;
  }
  return {cplx(w), cplx(wp), cplx(wpp)};
}

state rk4_along(const HypOde& ode, state y, cplx from, cplx to, double step) {
  const cplx span = to - from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / step)));
  const cplx h = span / static_cast<double>(steps);
  cplx z = from;
  for (int i = 0; i < steps; ++i) {
    const state k1 = ode.derivative(z, y);
    state y2;
    for (int c = 0; c < 3; ++c) y2[c] = y[c] + 0.5 * h * k1[c];
    const state k2 = ode.derivative(z + 0.5 * h, y2);
    for (int c = 0; c < 3; ++c) y2[c] = y[c] + 0.5 * h * k2[c];
    const state k3 = ode.derivative(z + 0.5 * h, y2);
    for (int c = 0; c < 3; ++c) y2[c] = y[c] + h * k3[c];
    const state k4 = ode.derivative(z + h, y2);
    for (int c = 0; c < 3; ++c)
      y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    z += h;
  }
  return y;
}

// Continuation of 3F2 from the series disc to z_target > 1 along a rectangle
// below the real axis; the detour side selects the branch reached from
// Im z < 0, which is the one whose values the comparison reproduces.
cplx hyp3f2_continued(double a1, double a2, double a3, double b1, double b2, double z_target) {
  const HypOde ode = make_ode(a1, a2, a3, b1, b2);
  const double z0 = 0.2;
  state y = series_seed(a1, a2, a3, b1, b2, z0);
  const cplx detour(0.0, -1.5);
  const double step = 1e-3;
  y = rk4_along(ode, y, cplx(z0), cplx(z0) + detour, step);
  y = rk4_along(ode, y, cplx(z0) + detour, cplx(z_target) + detour, step);
  y = rk4_along(ode, y, cplx(z_target) + detour, cplx(z_target), step);
  return y[0];
}

}  // namespace

std::complex<double> u2_moment_real_k_continued(double k, double x_abs) {
  if (!(x_abs > 0.0 && x_abs < 1.0))
    throw validation_error("the continued variant covers 0 < |x| < 1 only");
  const double z = 1.0 / (x_abs * x_abs);
  return std::pow(2.0 * x_abs, 2.0 * k) * hyp3f2_continued(0.5, -k, -k, 1.0, 2.0, z);
}

std::complex<double> u2_moment_real_k_binomial(double k, double x_abs) {
  if (!(x_abs > 0.0)) throw validation_error("|x| must be positive");
  const double catalan =
      std::tgamma(2.0 * k + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(k + 1.0)) / (k + 1.0);
  const double z = x_abs * x_abs;
  if (z <= 1.0) return catalan * hyp3f2_numeric(-1.0 - k, -k, -k, 1.0, 0.5 - k, z);
  return catalan * hyp3f2_continued(-1.0 - k, -k, -k, 1.0, 0.5 - k, z);
}

double u2_log_moment(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw validation_error("log moment needs 0 <= r < 1");
  const double f = hyp3f2_numeric(0.5, 0.5, 0.5, 1.5, 1.5, r * r);
  return (2.0 * r * f + r * std::sqrt(1.0 - r * r) + std::asin(r)) / M_PI - 0.5;
}

double u2_mean_zero_count(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw validation_error("zero count needs 0 <= u <= 1");
  const double root = std::sqrt(std::max(0.0, 1.0 - u * u));
  return (2.0 * u * root + std::acos(1.0 - 2.0 * u * u)) / M_PI;
}

}  // namespace cuem
