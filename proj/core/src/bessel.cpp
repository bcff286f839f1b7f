#include "cuem/bessel.hpp"

#include "cuem/errors.hpp"

namespace cuem {

TaylorSeries<BigRational> bessel_g_series(int nu, int order_cap) {
  if (nu < 0) throw validation_error("bessel entry series needs nu >= 0");
  if (order_cap < 0) throw validation_error("negative series order");
  TaylorSeries<BigRational> s(1, order_cap);
  BigRational c = BigRational(1) / factorial(static_cast<unsigned long>(nu));
  s.set_coefficient(0, 0, c);
  for (int m = 1; m <= order_cap; ++m) {
    c /= BigRational(m) * BigRational(m + nu);
    s.set_coefficient(m, 0, c);
  }
  return s;
}

}  // namespace cuem
