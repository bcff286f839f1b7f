#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cuem/errors.hpp"
#include "cuem/rational.hpp"

namespace cuem {

// Square matrix over one scalar kind (BigRational, RatPolynomial or a
// TaylorSeries instantiation). Homogeneity is enforced by the type system.
template <class Ring>
class RingMatrix {
public:
  RingMatrix(int n, const Ring& fill) : n_(n), e_(static_cast<std::size_t>(n) * n, fill) {
    if (n < 0) throw validation_error("negative matrix size");
  }

  int size() const { return n_; }
  Ring& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Ring& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  void swap_rows(int a, int b) {
    for (int j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
  }

private:
  int n_;
  std::vector<Ring> e_;
};

namespace detail {

// Fraction-free elimination; divisions by the previous pivot are exact. The
// all-integer case runs on raw mpz with mpz_divexact, which is where the
// composition-sum entries land.
BigRational bareiss_determinant(RingMatrix<BigRational> m);

}  // namespace detail

// Division-free determinant by Laplace expansion over column subsets,
// memoized layer by layer: O(n 2^n) ring multiplications. This is the route
// for polynomial and series entries, where n stays small (<= 12).
template <class Ring>
Ring determinant(const RingMatrix<Ring>& m) {
  const int n = m.size();
  if (n <= 0) throw validation_error("minor-expansion determinant needs a nonempty matrix");
  std::unordered_map<std::uint32_t, Ring> layer;
  for (int j = 0; j < n; ++j) layer.emplace(std::uint32_t{1} << j, m.at(0, j));
  for (int r = 2; r <= n; ++r) {
    std::unordered_map<std::uint32_t, Ring> next;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (std::popcount(mask) != r) continue;
      // Expand along row r-1; columns of mask in increasing order carry
      // cofactor signs (-1)^{(r-1)+pos}.
      std::optional<Ring> acc;
      int pos = 0;
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        Ring term = m.at(r - 1, j) * layer.at(mask & ~(std::uint32_t{1} << j));
        const bool negative = ((r - 1) + pos) & 1;
        if (!acc)
          acc = negative ? -term : std::move(term);
        else
          *acc = negative ? *acc - term : *acc + term;
        ++pos;
      }
      next.emplace(mask, std::move(*acc));
    }
    layer = std::move(next);
  }
  return layer.at((std::uint32_t{1} << n) - 1);
}

// Exact determinant over the rationals; a 0x0 matrix yields 1.
inline BigRational determinant(const RingMatrix<BigRational>& m) {
  if (m.size() == 0) return BigRational(1);
  return detail::bareiss_determinant(m);
}

// Both sides of the determinant column identity
//   det(A, a2-a1, ..., ak-a(k-1)) = sum_i det(a1, ..., A at position i, ..., ak),
// returned as (left, right) for the caller to compare.
std::pair<BigRational, BigRational> column_identity_check(
    const std::vector<BigRational>& a_col,
    const std::vector<std::vector<BigRational>>& cols);

}  // namespace cuem
