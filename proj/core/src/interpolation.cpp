#include "cuem/interpolation.hpp"

#include "cuem/errors.hpp"

namespace cuem {

// Newton's divided differences, expanded back to the monomial basis; O(n^2)
// exact arithmetic either way, but the table keeps intermediates small.
RatPolynomial lagrange_interpolate(const std::vector<std::pair<long, BigRational>>& points) {
  if (points.empty()) throw validation_error("interpolation needs at least one point");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first) throw duplicate_abscissa(points[i].first);

  std::vector<BigRational> dd;
  dd.reserve(n);
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) /
              BigRational(points[i].first - points[i - level].first);

  // Horner over the Newton basis: p = dd[n-1]; p = p*(N - x_i) + dd[i].
  RatPolynomial p(dd[n - 1]);
  const RatPolynomial var = RatPolynomial::variable();
  for (std::size_t i = n - 1; i-- > 0;)
    p = p * (var - RatPolynomial(points[i].first)) + RatPolynomial(dd[i]);
  return p;
}

}  // namespace cuem
