#pragma once

#include <utility>
#include <vector>

#include "cuem/polynomial.hpp"

namespace cuem {

// Unique polynomial of degree < points.size() through all points, exact.
// Throws duplicate_abscissa when two abscissae coincide and validation_error
// on an empty input.
RatPolynomial lagrange_interpolate(const std::vector<std::pair<long, BigRational>>& points);

}  // namespace cuem
