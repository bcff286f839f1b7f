#pragma once

#include "cuem/series.hpp"

namespace cuem {

// g_nu(x) = sum_m x^m / (m! (m+nu)!), the entry series of the Bessel
// determinant after the x^{nu/2} prefactors of I_nu(2 sqrt(x)) have been
// pulled out of the rows and columns (they aggregate to exactly x^{k^2/2}).
TaylorSeries<BigRational> bessel_g_series(int nu, int order_cap);

}  // namespace cuem
