#include "cuem/moments.hpp"

#include <algorithm>
#include <atomic>

#include "cuem/aberth.hpp"
#include "cuem/bessel.hpp"
#include "cuem/binomial.hpp"
#include "cuem/errors.hpp"
#include "cuem/interpolation.hpp"
#include "cuem/laguerre.hpp"
#include "cuem/matrix.hpp"
#include "cuem/painleve.hpp"
#include "cuem/parallel.hpp"

namespace cuem {

const char* to_string(MomentMethod m) {
  switch (m) {
    case MomentMethod::sumofdets: return "sumofdets";
    case MomentMethod::laguerre_k: return "laguerre-k";
    case MomentMethod::laguerre_n: return "laguerre-n";
    case MomentMethod::painleve: return "painleve";
    case MomentMethod::general_x: return "general-x";
  }
  return "unknown";
}

BigRational charpoly_moment(long n, int k) {
  if (n < 1) throw validation_error("charpoly moment needs N >= 1");
  if (k < 0) throw validation_error("k must be non-negative");
  mpz_class num(1), den(1), f;
  for (long j = 1; j <= n; ++j) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - 1));
    num *= f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * k + j - 1));
    num *= f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k + j - 1));
    den *= f * f;
  }
  return BigRational(num, den);
}

RatPolynomial charpoly_moment_poly(int k) {
  if (k < 0) throw validation_error("k must be non-negative");
  RatPolynomial p(1);
  const RatPolynomial var = RatPolynomial::variable();
  BigRational scale(1);
  for (int j = 0; j < k; ++j) {
    scale *= factorial(static_cast<unsigned long>(j)) /
             factorial(static_cast<unsigned long>(j + k));
    for (int i = 0; i < k; ++i) p = p * (var + RatPolynomial(static_cast<long>(i + j + 1)));
  }
  return p * scale;
}

BigRational deriv_moment_sumofdets(long n, int k, const ProgressFn& progress) {
  if (n < 0) throw validation_error("N must be non-negative");
  if (k < 0) throw validation_error("k must be non-negative");
  if (k == 0) return BigRational(1);

  // Entries depend only on s = (i-1)+(j-1) and the column's t; tabulate once.
  const int smax = 2 * k - 2;
  std::vector<std::vector<BigRational>> table(static_cast<std::size_t>(smax) + 1);
  for (int s = 0; s <= smax; ++s) {
    auto& row = table[static_cast<std::size_t>(s)];
    row.reserve(static_cast<std::size_t>(2 * k) + 1);
    for (int t = 0; t <= 2 * k; ++t)
      row.push_back(generalized_binomial(n + k + s, static_cast<unsigned>(2 * k + t - 1)));
  }

  std::uint64_t total = 0;
  for (int m = 0; m <= k; ++m)
    total += static_cast<std::uint64_t>(
        generalized_binomial(static_cast<long>(2 * k + m - 1), static_cast<unsigned>(k - 1))
            .to_long());

  BigRational acc(0);
  std::uint64_t done = 0;
  std::vector<unsigned> t(static_cast<std::size_t>(k), 0);
  for (int m = 0; m <= k; ++m) {
    BigRational inner(0);
    // Weak compositions of k+m into k parts, colexicographic, explicit stack.
    std::fill(t.begin(), t.end(), 0u);
    t[0] = static_cast<unsigned>(k + m);
    for (;;) {
      RingMatrix<BigRational> mat(k, BigRational(0));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          mat.at(i, j) = table[static_cast<std::size_t>(i + j)][t[static_cast<std::size_t>(j)]];
      inner += multinomial(t) * determinant(mat);
      ++done;
      if (progress && (done & 1023) == 0) progress(done, total);

      std::size_t idx = 0;
      while (t[idx] == 0) ++idx;
      if (idx + 1 == t.size()) break;
      const unsigned v = t[idx];
      t[idx] = 0;
      t[0] = v - 1;
      t[idx + 1] += 1;
    }
    BigRational term = generalized_binomial(static_cast<long>(k), static_cast<unsigned>(m)) *
                       pow(BigRational(n), k - m) * inner;
    if (m % 2) term = -term;
    acc += term;
  }
  if ((k * (k - 1) / 2) % 2) acc = -acc;
  if (progress) progress(total, total);
  return acc;
}

namespace detail {

BigRational extract_moment(const TaylorSeries<BigRational>& det_series, long n, int k,
                           bool alternate_h, int sign_prefix) {
  BigRational sum(0);
  for (int h = 0; h <= k; ++h) {
    BigRational term = generalized_binomial(static_cast<long>(k), static_cast<unsigned>(h)) *
                       pow(BigRational(n), k - h) *
                       factorial(static_cast<unsigned long>(k + h)) *
                       det_series.coefficient(k + h);
    if (alternate_h && h % 2) term = -term;
    sum += term;
  }
  return sign_prefix < 0 ? -sum : sum;
}

}  // namespace detail

BigRational deriv_moment_laguerre_k(long n, int k) {
  if (n < 1) throw validation_error("laguerre-k route needs N >= 1");
  if (k < 0) throw validation_error("k must be non-negative");
  if (k == 0) return BigRational(1);

  const TaylorSeries<BigRational> fill(1, 2 * k);
  RingMatrix<TaylorSeries<BigRational>> mat(k, fill);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mat.at(i, j) = polynomial_to_series(laguerre(static_cast<int>(n) + i - j, 2 * k - 1), 2 * k);
  const auto det = determinant(mat);
  return detail::extract_moment(det, n, k, /*alternate_h=*/false, (k % 2) ? -1 : 1);
}

RatPolynomial deriv_moment_laguerre_k_symbolic(int k) {
  if (k < 0) throw validation_error("k must be non-negative");
  if (k == 0) return RatPolynomial(1);

  const TaylorSeries<RatPolynomial> fill(1, 2 * k);
  RingMatrix<TaylorSeries<RatPolynomial>> mat(k, fill);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mat.at(i, j) = laguerre_symbolic(i - j, 2 * k - 1, 2 * k);
  const auto det = determinant(mat);

  const RatPolynomial var = RatPolynomial::variable();
  RatPolynomial n_power(1);
  std::vector<RatPolynomial> powers(static_cast<std::size_t>(k) + 1);
  for (int e = 0; e <= k; ++e) {
    powers[static_cast<std::size_t>(e)] = n_power;
    n_power = n_power * var;
  }

  RatPolynomial sum;
  for (int h = 0; h <= k; ++h) {
    RatPolynomial term = det.coefficient(k + h) * powers[static_cast<std::size_t>(k - h)];
    term = term * (generalized_binomial(static_cast<long>(k), static_cast<unsigned>(h)) *
                   factorial(static_cast<unsigned long>(k + h)));
    sum += term;
  }
  if (k % 2) sum = -sum;
  return sum;
}

BigRational deriv_moment_laguerre_n(long n, int k) {
  if (n < 1) throw validation_error("laguerre-n route needs N >= 1");
  if (k < 0) throw validation_error("k must be non-negative");
  if (k == 0) return BigRational(1);

  const TaylorSeries<BigRational> fill(1, 2 * k);
  RingMatrix<TaylorSeries<BigRational>> mat(static_cast<int>(n), fill);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      mat.at(j, l) = polynomial_to_series(laguerre(j - l + k, -2 * k - 1), 2 * k);
  const auto det = determinant(mat);
  const int prefix = ((static_cast<long>(k) * n) % 2) ? -1 : 1;
  return detail::extract_moment(det, n, k, /*alternate_h=*/true, prefix);
}

BigRational deriv_moment_general_x(long n, int k, const BigRational& q) {
  if (n < 1) throw validation_error("general-x route needs N >= 1");
  if (k < 0) throw validation_error("k must be non-negative");
  if (q.sign() < 0) throw validation_error("q = |x|^2 must be non-negative");
  if (q == BigRational(1)) throw q_equals_one();
  if (k == 0) return BigRational(1);

  const BigRational q_minus_1 = q - BigRational(1);
  const BigRational one_minus_q = BigRational(1) - q;

  const TaylorSeries<BigRational> fill(2, k, k);
  RingMatrix<TaylorSeries<BigRational>> mat(k, fill);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const long a = n + k + i + j - 1;
      TaylorSeries<BigRational> entry(2, k, k);
      for (int m = 0; m <= k; ++m)
        for (int nn = 0; nn <= k; ++nn) {
          if (m + nn + 2 * k > a) continue;  // the contour integral vanishes
          BigRational residue_q(0), ratio_power(1);
          for (int l = 0; l <= nn + k - 1; ++l) {
            residue_q += generalized_binomial(a - 1, static_cast<unsigned>(nn + k - 1 - l)) *
                         generalized_binomial(-static_cast<long>(m + k), static_cast<unsigned>(l)) *
                         ratio_power;
            ratio_power *= q / q_minus_1;
          }
          residue_q *= pow(q, a - nn - k) / pow(q_minus_1, m + k);

          BigRational residue_1(0), inv_power(1);
          for (int l = 0; l <= m + k - 1; ++l) {
            residue_1 += generalized_binomial(a - 1, static_cast<unsigned>(m + k - 1 - l)) *
                         generalized_binomial(-static_cast<long>(nn + k), static_cast<unsigned>(l)) *
                         inv_power;
            inv_power /= one_minus_q;
          }
          residue_1 /= pow(one_minus_q, nn + k);

          entry.set_coefficient(m, nn,
                                (residue_q + residue_1) /
                                    (factorial(static_cast<unsigned long>(m)) *
                                     factorial(static_cast<unsigned long>(nn))));
        }
      mat.at(i - 1, j - 1) = entry;
    }

  const auto det = determinant(mat);
  TaylorSeries<BigRational> exp_t1(2, k, k);
  BigRational coeff(1);
  exp_t1.set_coefficient(0, 0, coeff);
  for (int m = 1; m <= k; ++m) {
    coeff *= BigRational(-n) / BigRational(m);
    exp_t1.set_coefficient(m, 0, coeff);
  }
  const auto full = det * exp_t1;
  BigRational result = full.coefficient(k, k) * factorial(static_cast<unsigned long>(k)) *
                       factorial(static_cast<unsigned long>(k));
  if ((k * (k + 1) / 2) % 2) result = -result;
  return result;
}

BigRational deriv_moment(long n, int k, MomentMethod method, const BigRational& q,
                         const ProgressFn& progress) {
  if (method == MomentMethod::general_x) return deriv_moment_general_x(n, k, q);
  if (q != BigRational(1))
    throw validation_error(std::string(to_string(method)) + " requires q = 1");
  switch (method) {
    case MomentMethod::sumofdets: return deriv_moment_sumofdets(n, k, progress);
    case MomentMethod::laguerre_k: return deriv_moment_laguerre_k(n, k);
    case MomentMethod::laguerre_n: return deriv_moment_laguerre_n(n, k);
    case MomentMethod::painleve: return painleve_moment(n, k);
    case MomentMethod::general_x: break;
  }
  throw validation_error("unknown moment method");
}

RatPolynomial deriv_moment_poly(int k, MomentMethod method, int threads,
                                const ProgressFn& progress) {
  if (k < 1) throw validation_error("moment polynomial needs k >= 1");
  std::function<BigRational(long)> eval;
  switch (method) {
    case MomentMethod::sumofdets:
      eval = [k](long n) { return deriv_moment_sumofdets(n, k); };
      break;
    case MomentMethod::laguerre_k:
      eval = [k](long n) { return deriv_moment_laguerre_k(n, k); };
      break;
    case MomentMethod::painleve:
      eval = [k](long n) { return painleve_moment(n, k); };
      break;
    default:
      throw validation_error(std::string(to_string(method)) +
                             " is not an interpolation method for the moment polynomial");
  }

  // Consecutive abscissae starting at N = k keep every Laguerre order
  // non-negative on the way.
  const std::size_t count = static_cast<std::size_t>(k) * k + 2 * static_cast<std::size_t>(k) + 1;
  std::vector<std::pair<long, BigRational>> points(count);
  std::atomic<std::uint64_t> done{0};
  parallel_for(count, threads, [&](std::size_t idx) {
    const long n = static_cast<long>(k) + static_cast<long>(idx);
    points[idx] = {n, eval(n)};
    const std::uint64_t d = ++done;
    if (progress) progress(d, count);
  });

  RatPolynomial p = lagrange_interpolate(points);
  if (p.degree() != k * k + 2 * k)
    throw contract_error("derivative moment polynomial has degree " +
                         std::to_string(p.degree()) + ", expected " +
                         std::to_string(k * k + 2 * k));
  return p;
}

RatPolynomial f_ratio(int k, MomentMethod method, int threads, const ProgressFn& progress) {
  if (k < 1) throw validation_error("f(N,k) needs k >= 1");
  const RatPolynomial moment = deriv_moment_poly(k, method, threads, progress);
  RatPolynomial f = exact_divide(moment, charpoly_moment_poly(k));
  if (f.degree() != 2 * k)
    throw contract_error("f(N,k) has degree " + std::to_string(f.degree()) + ", expected " +
                         std::to_string(2 * k));
  if (!f.constant_term().is_zero())
    throw contract_error("f(N,k) has a nonzero constant term");
  return f;
}

BigRational b_k_leading(int k) {
  if (k < 1) throw validation_error("b_k needs k >= 1");
  const TaylorSeries<BigRational> fill(1, 2 * k);
  RingMatrix<TaylorSeries<BigRational>> mat(k, fill);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) mat.at(i - 1, j - 1) = bessel_g_series(i + j - 1, 2 * k);
  const auto det = determinant(mat);

  TaylorSeries<BigRational> exp_minus_x(1, 2 * k);
  BigRational coeff(1);
  exp_minus_x.set_coefficient(0, 0, coeff);
  for (int m = 1; m <= 2 * k; ++m) {
    coeff *= BigRational(-1) / BigRational(m);
    exp_minus_x.set_coefficient(m, 0, coeff);
  }
  const auto full = det * exp_minus_x;

  BigRational sum(0);
  for (int h = 0; h <= k; ++h)
    sum += generalized_binomial(static_cast<long>(k), static_cast<unsigned>(h)) *
           factorial(static_cast<unsigned long>(k + h)) * full.coefficient(k + h);
  if ((k * (k + 1) / 2) % 2) sum = -sum;
  return sum;
}

namespace {

// Real-coefficient input: collapse near-real roots, then average conjugate
// partners so the returned multiset is exactly conjugate-closed.
void symmetrize_conjugates(std::vector<std::complex<double>>& roots) {
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  const double tol = 1e-9 * scale;

  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(roots[i].imag()) <= tol)
      roots[i] = {roots[i].real(), 0.0};
    else if (roots[i].imag() > 0.0)
      upper.push_back(i);
    else
      lower.push_back(i);
  }
  if (upper.size() != lower.size()) return;  // left for the residual check to flag

  std::vector<bool> used(lower.size(), false);
  for (const std::size_t u : upper) {
    double best = 0.0;
    std::size_t best_j = lower.size();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(std::conj(roots[u]) - roots[lower[j]]);
      if (best_j == lower.size() || d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == lower.size()) return;
    used[best_j] = true;
    const std::complex<double> mean = 0.5 * (roots[u] + std::conj(roots[lower[best_j]]));
    roots[u] = mean;
    roots[lower[best_j]] = std::conj(mean);
  }
}

}  // namespace

std::vector<std::complex<double>> roots_of_f(int k, double residual_tol, MomentMethod method) {
  if (k < 1) throw validation_error("roots of f(N,k) need k >= 1");
  const RatPolynomial f = f_ratio(k, method);

  double max_mag = 0.0;
  for (int i = 0; i <= f.degree(); ++i)
    max_mag = std::max(max_mag, std::abs(f.coefficient(i).to_double()));
  std::vector<std::complex<double>> c;
  c.reserve(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i)
    c.emplace_back(f.coefficient(i).to_double() / max_mag, 0.0);

  auto roots = aberth_roots(c, 1e-13);
  symmetrize_conjugates(roots);
  for (const auto& r : roots)
    if (relative_residual(c, r) > residual_tol) throw root_finding_failure();

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace cuem
