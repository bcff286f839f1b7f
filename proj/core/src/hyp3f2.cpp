#include "cuem/hyp3f2.hpp"

#include <cmath>
#include <limits>

#include "cuem/errors.hpp"

namespace cuem {

namespace {

// Terminating index contributed by one upper parameter: -a when a is a
// non-positive integer, absent otherwise.
bool non_positive_integer(const BigRational& a, long* out) {
  if (!a.is_integer() || a.sign() > 0) return false;
  *out = -a.to_long();
  return true;
}

bool non_positive_integer(double a, long* out) {
  if (a > 0 || a != std::floor(a)) return false;
  *out = static_cast<long>(-a);
  return true;
}

}  // namespace

BigRational hyp3f2_exact(const BigRational& a1, const BigRational& a2, const BigRational& a3,
                         const BigRational& b1, const BigRational& b2, const BigRational& z) {
  long n_max = -1;
  for (const BigRational* a : {&a1, &a2, &a3}) {
    long m;
    if (non_positive_integer(*a, &m) && (n_max < 0 || m < n_max)) n_max = m;
  }
  if (n_max < 0) throw non_terminating();
  for (const BigRational* b : {&b1, &b2}) {
    long m;
    if (non_positive_integer(*b, &m) && m <= n_max - 1) throw pochhammer_pole(b->str());
  }

  BigRational sum(1), term(1);
  for (long n = 0; n < n_max; ++n) {
    const BigRational bn(n);
    term *= (a1 + bn) * (a2 + bn) * (a3 + bn);
    term /= (b1 + bn) * (b2 + bn) * BigRational(n + 1);
    term *= z;
    sum += term;
  }
  return sum;
}

double hyp3f2_numeric(double a1, double a2, double a3, double b1, double b2, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw validation_error("3F2 argument must lie in [0,1]");

  long n_max = -1;
  for (double a : {a1, a2, a3}) {
    long m;
    if (non_positive_integer(a, &m) && (n_max < 0 || m < n_max)) n_max = m;
  }
  for (double b : {b1, b2}) {
    long m;
    if (non_positive_integer(b, &m) && (n_max < 0 || m <= n_max - 1))
      throw pochhammer_pole(std::to_string(b));
  }
  if (z == 1.0 && n_max < 0) {
    const double margin = b1 + b2 - a1 - a2 - a3;
    if (!(margin > 0.0)) throw convergence_condition_violated(margin);
  }

  double sum = 1.0, comp = 0.0, term = 1.0;
  constexpr long kTermCap = 1000000;
  for (long n = 0; n < kTermCap; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a1 + dn) * (a2 + dn) * (a3 + dn) / ((b1 + dn) * (b2 + dn) * (dn + 1.0)) * z;
    if (term == 0.0) return sum;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
  }
  throw slow_convergence();
}

}  // namespace cuem
