#include "cuem/matrix.hpp"

namespace cuem {
namespace detail {

namespace {

bool all_integer(const RingMatrix<BigRational>& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m.at(i, j).is_integer()) return false;
  return true;
}

BigRational bareiss_integer(const RingMatrix<BigRational>& in) {
  const int n = in.size();
  std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = in.at(i, j).numerator();
  auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<std::size_t>(i) * n + j]; };

  int sign = 1;
  mpz_class prev(1), t;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (sgn(at(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return BigRational(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(at(c, j), at(pivot, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j) {
        t = at(r, j) * at(c, c) - at(r, c) * at(c, j);
        mpz_divexact(at(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, c) = 0;
    }
    prev = at(c, c);
  }
  mpz_class det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return BigRational(det);
}

}  // namespace

BigRational bareiss_determinant(RingMatrix<BigRational> m) {
  const int n = m.size();
  if (n == 1) return m.at(0, 0);
  if (all_integer(m)) return bareiss_integer(m);

  int sign = 1;
  BigRational prev(1);
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return BigRational(0);
    if (pivot != c) {
      m.swap_rows(c, pivot);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        m.at(r, j) = (m.at(r, j) * m.at(c, c) - m.at(r, c) * m.at(c, j)) / prev;
      m.at(r, c) = BigRational(0);
    }
    prev = m.at(c, c);
  }
  BigRational det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace detail

std::pair<BigRational, BigRational> column_identity_check(
    const std::vector<BigRational>& a_col, const std::vector<std::vector<BigRational>>& cols) {
  const std::size_t k = cols.size();
  if (k == 0) throw validation_error("column identity needs at least one column");
  if (a_col.size() != k) throw dimension_mismatch(a_col.size(), k);
  for (const auto& c : cols)
    if (c.size() != k) throw dimension_mismatch(c.size(), k);

  const int n = static_cast<int>(k);
  RingMatrix<BigRational> left(n, BigRational(0));
  for (int i = 0; i < n; ++i) {
    left.at(i, 0) = a_col[static_cast<std::size_t>(i)];
    for (int j = 1; j < n; ++j)
      left.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                      cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
  }

  BigRational right(0);
  for (int subst = 0; subst < n; ++subst) {
    RingMatrix<BigRational> m(n, BigRational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (j == subst) ? a_col[static_cast<std::size_t>(i)]
                                  : cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    right += determinant(m);
  }
  return {determinant(left), right};
}

}  // namespace cuem
