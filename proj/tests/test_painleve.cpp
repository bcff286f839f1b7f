#include <doctest.h>

#include <random>

#include "cuem/errors.hpp"
#include "cuem/moments.hpp"
#include "cuem/painleve.hpp"

using namespace cuem;

namespace {

// The published coefficient formulas, implemented directly as the oracle.
BigRational printed_c(int j, long n, int k) {
  const BigRational nn(n), kk(k);
  switch (j) {
    case 1:
      return -nn / BigRational(2);
    case 2:
      return -(nn * (nn + BigRational(2) * kk)) /
             (BigRational(4) * BigRational(2L * k - 1) * BigRational(2L * k + 1));
    case 3:
    case 5:
    case 7:
      return BigRational(0);
    case 4: {
      const BigRational numerator = (BigRational(2) * nn + BigRational(2) * kk + 1) *
                                    (BigRational(2) * nn + BigRational(2) * kk - 1) *
                                    (nn + BigRational(2) * kk) * nn;
      const BigRational denominator = BigRational(16) * BigRational(2L * k - 3) *
                                      BigRational(2L * k + 3) * pow(BigRational(2L * k - 1), 2) *
                                      pow(BigRational(2L * k + 1), 2);
      return numerator / denominator;
    }
    case 6: {
      const BigRational numerator =
          (BigRational(6) * nn * nn + BigRational(12) * nn * kk +
           BigRational(4) * kk * kk - 1) *
          (BigRational(2) * nn + BigRational(2) * kk + 1) *
          (BigRational(2) * nn + BigRational(2) * kk - 1) * (nn + BigRational(2) * kk) * nn;
      const BigRational denominator = BigRational(32) * BigRational(2L * k - 5) *
                                      BigRational(2L * k + 5) * pow(BigRational(2L * k - 1), 3) *
                                      pow(BigRational(2L * k + 1), 3) *
                                      BigRational(2L * k - 3) * BigRational(2L * k + 3);
      return -(numerator / denominator);
    }
    default:
      throw std::out_of_range("no printed formula");
  }
}

}  // namespace

TEST_CASE("seed and second coefficient") {
  for (long n : {1L, 2L, 5L, 9L})
    for (int k : {1, 2, 3, 4}) {
      const auto s = painleve_coefficients(n, k, 2 * k);
      CHECK(s.coefficient(1) == printed_c(1, n, k));
      CHECK(s.coefficient(2) == printed_c(2, n, k));
    }
}

TEST_CASE("printed coefficient list through c_7") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> pick_n(1, 20);
  std::uniform_int_distribution<int> pick_k(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const long n = pick_n(rng);
    const int k = pick_k(rng);
    const auto s = painleve_coefficients(n, k, 7 > 2 * k ? 7 : 2 * k);
    for (int j = 1; j <= 7; ++j) CHECK(s.coefficient(j) == printed_c(j, n, k));
  }
  // The degenerate orders 2k+1 <= 7 explicitly.
  for (int k : {1, 2, 3}) {
    const auto s = painleve_coefficients(4, k, 7);
    for (int j = 1; j <= 7; ++j) CHECK(s.coefficient(j) == printed_c(j, 4, k));
  }
}

TEST_CASE("odd coefficients vanish beyond the seed") {
  for (long n : {2L, 7L})
    for (int k : {2, 4}) {
      const auto s = painleve_coefficients(n, k, 2 * k + 4);
      for (int j = 3; j <= s.truncation; j += 2) CHECK(s.coefficient(j).is_zero());
    }
}

TEST_CASE("painleve moment values and cross checks") {
  CHECK(painleve_moment(2, 1) == BigRational(5));
  CHECK(painleve_moment(4, 0) == BigRational(1));
  CHECK(painleve_moment(7, 3) == deriv_moment_sumofdets(7, 3));
  for (long n = 1; n <= 8; ++n)
    CHECK(painleve_moment(n, 2) == deriv_moment_sumofdets(n, 2));
}

TEST_CASE("painleve f polynomial at k = 1") {
  const RatPolynomial expect = RatPolynomial::from_coefficients(
      {BigRational(0), BigRational(1, 6), BigRational(1, 3)});
  CHECK(painleve_f_poly(1) == expect);
}

TEST_CASE("painleve validation") {
  CHECK_THROWS_AS(painleve_coefficients(0, 1, 2), validation_error);
  CHECK_THROWS_AS(painleve_coefficients(2, 0, 2), validation_error);
  CHECK_THROWS_AS(painleve_coefficients(2, 2, 3), validation_error);  // below 2k
}
