#include <doctest.h>

#include <cmath>
#include <functional>

#include "cuem/errors.hpp"
#include "cuem/moments.hpp"
#include "cuem/n2.hpp"

using namespace cuem;

namespace {

// Adaptive Simpson quadrature, the Jensen-identity oracle.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fb, fm, tol, 40);
}

// mean_zero_count(u)/u with the removable singularity at 0 patched by its
// series value.
double zero_count_over_u(double u) {
  if (u < 1e-6) return 4.0 / M_PI * (1.0 - u * u / 6.0);
  return u2_mean_zero_count(u) / u;
}

}  // namespace

TEST_CASE("u2 moment sum examples") {
  CHECK(u2_moment_sum(1, BigRational(1)) == BigRational(5));
  CHECK(u2_moment_sum(3, BigRational(0)) == BigRational(5));  // Catalan C_3
  CHECK(u2_moment_sum(0, BigRational(7, 3)) == BigRational(1));
  CHECK(u2_moment_sum(1, BigRational(4)) == BigRational(17));
  // m-terms 5 + 8 + 16/9 + 64/729.
  CHECK(u2_moment_sum(3, BigRational(1, 9)) == BigRational(10837, 729));
}

TEST_CASE("u2 moment: sum and 3F2 forms agree") {
  CHECK(u2_moment_3f2(1, BigRational(1)) == BigRational(5));
  // At q = 0 only the m = 0 Catalan term survives on both routes.
  CHECK(u2_moment_3f2(1, BigRational(0)) == u2_moment_sum(1, BigRational(0)));
  CHECK(u2_moment_sum(1, BigRational(0)) == BigRational(1));
  for (int k = 0; k <= 10; ++k)
    for (const BigRational& q :
         {BigRational(0), BigRational(1, 4), BigRational(1), BigRational(4)})
      CHECK(u2_moment_3f2(k, q) == u2_moment_sum(k, q));
}

TEST_CASE("u2 moment ties N=2 to the composition sum") {
  for (int k = 0; k <= 4; ++k)
    CHECK(u2_moment_sum(k, BigRational(1)) == deriv_moment_sumofdets(2, k));
}

TEST_CASE("real-k moment on and outside the circle") {
  CHECK(u2_moment_real_k(1.0, 1.0) == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(u2_moment_real_k(3.0, 1.25) ==
        doctest::Approx(u2_moment_sum(3, BigRational(25, 16)).to_double()).epsilon(1e-9));
  for (int k = 1; k <= 6; ++k)
    for (double x : {1.0, 1.25, 2.0}) {
      const BigRational q(static_cast<long>(std::llround(x * x * 16)), 16);
      CHECK(u2_moment_real_k(static_cast<double>(k), x) ==
            doctest::Approx(u2_moment_sum(k, q).to_double()).epsilon(1e-9));
    }
}

TEST_CASE("real-k moment domain handling") {
  CHECK_THROWS_AS(u2_moment_real_k(1.0, 0.5), validation_error);
  CHECK_THROWS_AS(u2_moment_real_k(-1.1, 1.0), validation_error);
  CHECK_THROWS_AS(u2_moment_real_k(-1.3, 1.0), convergence_condition_violated);
  // At z = 1 with margin 1.5 the terms decay like n^{-2.5}: convergent, but
  // the 10^6-term cap fires before the 1e-16 stopping rule can.
  CHECK_THROWS_AS(u2_moment_real_k(-0.5, 1.0), slow_convergence);
  CHECK_NOTHROW(u2_moment_real_k(-0.5, 1.1));
}

TEST_CASE("continuation reproduces terminating values inside the circle") {
  // For integer k the 3F2 terminates, so the continuation must land on the
  // exact polynomial value even at 0 < x < 1, after the loop around z = 1.
  for (int k = 1; k <= 2; ++k)
    for (double x : {0.5, 0.2}) {
      const BigRational q(static_cast<long>(std::llround(x * x * 100)), 100);
      const std::complex<double> v = u2_moment_real_k_continued(k, x);
      const double expect = u2_moment_sum(k, q).to_double();
      CHECK(std::abs(v.real() - expect) < 1e-7 * std::max(1.0, std::abs(expect)));
      CHECK(std::abs(v.imag()) < 1e-7);
    }
  CHECK_THROWS_AS(u2_moment_real_k_continued(0.75, 1.5), validation_error);
}

TEST_CASE("continuation is genuinely complex at non-integer k") {
  const std::complex<double> g2 = u2_moment_real_k_continued(0.75, 0.2);
  CHECK(std::abs(g2.imag()) > 0.01);
  // The printed branch: 1.15548 - 0.13579 i.
  CHECK(g2.real() == doctest::Approx(1.15548).epsilon(5e-5));
  CHECK(g2.imag() == doctest::Approx(-0.13579).epsilon(5e-4));
}

TEST_CASE("binomial form at real k") {
  // At integer k it coincides with the exact sum, inside and on the circle.
  for (int k = 1; k <= 3; ++k)
    for (double x : {0.5, 1.0}) {
      const BigRational q(static_cast<long>(std::llround(x * x * 4)), 4);
      const std::complex<double> v = u2_moment_real_k_binomial(k, x);
      CHECK(v.real() == doctest::Approx(u2_moment_sum(k, q).to_double()).epsilon(1e-10));
      CHECK(std::abs(v.imag()) < 1e-12);
    }
  // Off integer k it lands on the printed comparison value 1.0409.
  const std::complex<double> g1 = u2_moment_real_k_binomial(0.75, 0.2);
  CHECK(g1.real() == doctest::Approx(1.0409).epsilon(5e-4));
  CHECK(std::abs(g1.imag()) < 1e-12);
}

TEST_CASE("binomial and hypergeometric real-k forms split above the circle") {
  // Printed as (G1, G2) = (14.4 - 0.04i, 27.5617) at k = 5/4, x = 9/5; only
  // the gap is asserted, the low-precision digits are not.
  const std::complex<double> g1 = u2_moment_real_k_binomial(1.25, 1.8);
  const double g2 = u2_moment_real_k(1.25, 1.8);
  CHECK(std::abs(g1 - std::complex<double>(g2, 0.0)) > 1.0);
  // At integer k the same pair agrees instead.
  const std::complex<double> g1_int = u2_moment_real_k_binomial(2, 1.8);
  CHECK(g1_int.real() == doctest::Approx(u2_moment_real_k(2, 1.8)).epsilon(1e-8));
  CHECK(std::abs(g1_int.imag()) < 1e-8);
}

TEST_CASE("log moment endpoints and monotonicity probe") {
  CHECK(u2_log_moment(0.0) == -0.5);
  CHECK(u2_log_moment(0.9) > u2_log_moment(0.1));
  CHECK_THROWS_AS(u2_log_moment(1.0), validation_error);
}

TEST_CASE("jensen identity against the quadrature oracle") {
  for (double r : {0.3, 0.6}) {
    const double via_zero_count = integrate(zero_count_over_u, 0.0, r, 1e-12);
    CHECK(std::abs((u2_log_moment(r) + 0.5) - via_zero_count) < 1e-8);
  }
}

TEST_CASE("mean zero count values") {
  CHECK(u2_mean_zero_count(0.0) == 0.0);
  CHECK(u2_mean_zero_count(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  const double u = 1.0 / std::sqrt(2.0);
  CHECK(u2_mean_zero_count(u) == doctest::Approx((1.0 + M_PI / 2.0) / M_PI).epsilon(1e-12));
}

TEST_CASE("mean zero count is nondecreasing on a 10^3 grid") {
  double prev = 0.0;
  bool monotone = true;
  for (int i = 0; i <= 1000; ++i) {
    const double v = u2_mean_zero_count(i / 1000.0);
    if (v < prev - 1e-15) monotone = false;
    prev = v;
  }
  CHECK(monotone);
}
