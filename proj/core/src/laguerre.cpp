#include "cuem/laguerre.hpp"

#include "cuem/binomial.hpp"
#include "cuem/errors.hpp"

namespace cuem {

RatPolynomial laguerre(int n, int alpha) {
  if (n < 0) return {};
  std::vector<BigRational> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  BigRational inv_fact(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) inv_fact /= BigRational(i);
    BigRational b = generalized_binomial(static_cast<long>(n) + alpha, static_cast<unsigned>(n - i));
    c.push_back(i % 2 == 0 ? b * inv_fact : -(b * inv_fact));
  }
  return RatPolynomial::from_coefficients(std::move(c));
}

TaylorSeries<RatPolynomial> laguerre_symbolic(int offset, int alpha, int degree_cap) {
  if (alpha < 1) throw validation_error("symbolic Laguerre entries need alpha >= 1");
  TaylorSeries<RatPolynomial> s(1, degree_cap);
  const RatPolynomial top =
      RatPolynomial::variable() + RatPolynomial(static_cast<long>(offset) + alpha);
  BigRational inv_fact(1);
  for (int i = 0; i <= degree_cap; ++i) {
    if (i > 0) inv_fact /= BigRational(i);
    RatPolynomial b = generalized_binomial(top, static_cast<unsigned>(alpha + i));
    s.set_coefficient(i, 0, b * (i % 2 == 0 ? inv_fact : -inv_fact));
  }
  return s;
}

TaylorSeries<BigRational> polynomial_to_series(const RatPolynomial& p, int order) {
  TaylorSeries<BigRational> s(1, order);
  const int top = p.degree() < order ? p.degree() : order;
  for (int i = 0; i <= top; ++i) s.set_coefficient(i, 0, p.coefficient(i));
  return s;
}

}  // namespace cuem
