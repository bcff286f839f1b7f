#pragma once

#include <vector>

#include "cuem/polynomial.hpp"
#include "cuem/rational.hpp"

namespace cuem {

// Generalized binomial coefficient top*(top-1)*...*(top-r+1)/r!. Total on
// integer tops of either sign; the classic factorial form is never used.
BigRational generalized_binomial(long top, unsigned r);

// Same product form with a polynomial top; the result is a degree-r polynomial.
RatPolynomial generalized_binomial(const RatPolynomial& top, unsigned r);

// Multinomial coefficient (sum parts)! / prod(parts!).
BigRational multinomial(const std::vector<unsigned>& parts);

}  // namespace cuem
