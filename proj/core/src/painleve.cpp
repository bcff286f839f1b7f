#include "cuem/painleve.hpp"

#include "cuem/errors.hpp"
#include "cuem/moments.hpp"
#include "cuem/series.hpp"

namespace cuem {

namespace {

// Left-hand side of
//   t^2 f''^2 + 4t f'^3 - (4k^2 - 4Nt + t^2 + 4f) f'^2
//     - (2kN(2k+t) + (4N-2t) f) f' - (kN - f)^2 = 0
// as an exact polynomial in t for a polynomial truncation f. Coefficients of
// t^j depend on c_1..c_{j+1} only, and the net c_{j+1} dependence cancels on
// the c_1 = -N/2 branch, so a truncation of degree j yields exact
// coefficients through order j.
RatPolynomial ode_lhs(const RatPolynomial& f, long n, int k) {
  const RatPolynomial t = RatPolynomial::variable();
  const RatPolynomial t2 = t * t;
  const RatPolynomial fp = f.derivative();
  const RatPolynomial fpp = fp.derivative();
  const BigRational nn(n), kk(k);

  RatPolynomial lhs = t2 * (fpp * fpp);
  lhs += (t * (fp * fp * fp)) * BigRational(4);

  RatPolynomial paren =
      RatPolynomial(kk * kk * BigRational(4)) - t * (nn * BigRational(4)) + t2 +
      f * BigRational(4);
  lhs -= paren * (fp * fp);

  const BigRational two_kn = BigRational(2) * kk * nn;
  RatPolynomial paren2 = (t + RatPolynomial(BigRational(2) * kk)) * two_kn +
                         (RatPolynomial(nn * BigRational(4)) - t * BigRational(2)) * f;
  lhs -= paren2 * fp;

  const RatPolynomial g = RatPolynomial(kk * nn) - f;
  lhs -= g * g;
  return lhs;
}

}  // namespace

PainleveSeries painleve_coefficients(long n, int k, int truncation) {
  if (n < 1) throw validation_error("painleve series needs N >= 1");
  if (k < 1) throw validation_error("painleve series needs k >= 1");
  if (truncation < 2 * k) throw validation_error("painleve truncation must be at least 2k");

  std::vector<BigRational> c(static_cast<std::size_t>(truncation) + 1, BigRational(0));
  c[1] = BigRational(-n, 2);

  auto lhs_for = [&](int degree, int trial_idx, const BigRational& trial) {
    std::vector<BigRational> fc(static_cast<std::size_t>(degree) + 1, BigRational(0));
    for (int j = 1; j <= degree; ++j)
      fc[static_cast<std::size_t>(j)] = (j == trial_idx) ? trial : c[static_cast<std::size_t>(j)];
    return ode_lhs(RatPolynomial::from_coefficients(std::move(fc)), n, k);
  };

  {
    const RatPolynomial seeded = lhs_for(1, 0, BigRational(0));
    if (!seeded.coefficient(0).is_zero() || !seeded.coefficient(1).is_zero())
      throw degenerate_pivot(1, n, k);
  }

  for (int j = 2; j <= truncation; ++j) {
    const BigRational l0 = lhs_for(j, j, BigRational(0)).coefficient(j);
    const BigRational lp = lhs_for(j, j, BigRational(1)).coefficient(j);
    const BigRational lm = lhs_for(j, j, BigRational(-1)).coefficient(j);
    const BigRational quad = (lp + lm) / BigRational(2) - l0;
    const BigRational lin = (lp - lm) / BigRational(2);

    if (!quad.is_zero()) {
      // The ODE is quadratic in f'', which makes the order-2 equation
      // quadratic in c_2 with two rational roots. The analytic branch is the
      // one carrying the known c_2.
      if (j != 2) throw degenerate_pivot(j, n, k);
      const BigRational candidate =
          -(BigRational(n) * BigRational(n + 2L * k)) /
          (BigRational(4) * BigRational(2L * k - 1) * BigRational(2L * k + 1));
      if (!(quad * candidate * candidate + lin * candidate + l0).is_zero())
        throw degenerate_pivot(j, n, k);
      c[static_cast<std::size_t>(j)] = candidate;
    } else if (!lin.is_zero()) {
      c[static_cast<std::size_t>(j)] = -(l0 / lin);
    } else if (l0.is_zero()) {
      // Degenerate order: the equation reads 0 = 0 and c_j is the second
      // free constant of the formal solution family. This happens exactly at
      // j = 2k+1; zero continues the branch with vanishing odd coefficients.
      if (j != 2 * k + 1) throw degenerate_pivot(j, n, k);
      c[static_cast<std::size_t>(j)] = BigRational(0);
    } else {
      throw degenerate_pivot(j, n, k);
    }
  }

  const RatPolynomial residual = lhs_for(truncation, 0, BigRational(0));
  for (int j = 0; j < truncation; ++j)
    if (!residual.coefficient(j).is_zero())
      throw contract_error("painleve series leaves a nonzero ODE residual at order " +
                           std::to_string(j));

  PainleveSeries out;
  out.n = n;
  out.k = k;
  out.truncation = truncation;
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

BigRational painleve_moment(long n, int k) {
  if (n < 1) throw validation_error("painleve moment needs N >= 1");
  if (k < 0) throw validation_error("k must be non-negative");
  if (k == 0) return BigRational(1);

  const PainleveSeries s = painleve_coefficients(n, k, 2 * k);
  TaylorSeries<BigRational> arg(1, 2 * k);
  for (int j = 1; j <= 2 * k; ++j)
    arg.set_coefficient(j, 0, s.coefficient(j) / BigRational(j));
  const TaylorSeries<BigRational> det_series = arg.exp() * charpoly_moment(n, k);
  return detail::extract_moment(det_series, n, k, /*alternate_h=*/false,
                                (k % 2) ? -1 : 1);
}

RatPolynomial painleve_f_poly(int k, int threads) {
  return f_ratio(k, MomentMethod::painleve, threads);
}

}  // namespace cuem
