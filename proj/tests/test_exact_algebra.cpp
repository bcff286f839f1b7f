#include <doctest.h>

#include <random>

#include "cuem/binomial.hpp"
#include "cuem/errors.hpp"
#include "cuem/interpolation.hpp"
#include "cuem/polynomial.hpp"
#include "cuem/rational.hpp"
#include "cuem/series.hpp"

using namespace cuem;

namespace {

std::mt19937 rng(20240811);

BigRational random_rational() {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return BigRational(num(rng), den(rng));
}

RatPolynomial random_polynomial(int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigRational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational());
  return RatPolynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(BigRational(2, 4).str() == "1/2");
  CHECK(BigRational(1, -2).str() == "-1/2");
  CHECK(BigRational(-6, -4).str() == "3/2");
  CHECK(BigRational(0, 7).str() == "0");
  CHECK(BigRational(5).str() == "5");
  CHECK(BigRational(2, 4) == BigRational(1, 2));
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK_THROWS_AS(BigRational(1, 0), validation_error);
}

TEST_CASE("rational string round trip") {
  for (int i = 0; i < 200; ++i) {
    const BigRational r = random_rational();
    CHECK(BigRational::from_string(r.str()) == r);
  }
  CHECK(BigRational::from_string("18702760476120263262720000").str() ==
        "18702760476120263262720000");
  CHECK_THROWS_AS(BigRational::from_string("not-a-number"), validation_error);
}

TEST_CASE("generalized binomial on integers") {
  CHECK(generalized_binomial(5, 2) == BigRational(10));
  CHECK(generalized_binomial(-3, 2) == BigRational(6));  // (-3)(-4)/2!
  CHECK(generalized_binomial(7, 0) == BigRational(1));
  CHECK(generalized_binomial(3, 5) == BigRational(0));
}

TEST_CASE("generalized binomial matches the factorial ratio on its classical domain") {
  for (long n = 0; n <= 12; ++n)
    for (unsigned r = 0; r <= static_cast<unsigned>(n); ++r) {
      const BigRational expect =
          factorial(static_cast<unsigned long>(n)) /
          (factorial(r) * factorial(static_cast<unsigned long>(n) - r));
      CHECK(generalized_binomial(n, r) == expect);
    }
}

TEST_CASE("generalized binomial with a polynomial top") {
  const RatPolynomial top = RatPolynomial::variable() + RatPolynomial(1);
  CHECK(generalized_binomial(top, 1) == top);
  // binom(N+1, 2) = (N+1)N/2
  const RatPolynomial expect = RatPolynomial::from_coefficients(
      {BigRational(0), BigRational(1, 2), BigRational(1, 2)});
  CHECK(generalized_binomial(top, 2) == expect);
  // Evaluating the polynomial form agrees with the integer form, negatives included.
  for (long n = -6; n <= 6; ++n)
    CHECK(generalized_binomial(top, 3).evaluate(n) == generalized_binomial(n + 1, 3));
}

TEST_CASE("polynomial arithmetic basics") {
  const RatPolynomial var = RatPolynomial::variable();
  CHECK(RatPolynomial().degree() == -1);
  CHECK((var * var - RatPolynomial(1)).degree() == 2);
  CHECK((var - var).degree() == -1);
  CHECK((var * var).evaluate(7) == BigRational(49));
  CHECK(var.derivative() == RatPolynomial(1));
  CHECK((var * var * var).derivative() ==
        RatPolynomial::monomial(BigRational(3), 2));
}

TEST_CASE("exact division") {
  const RatPolynomial var = RatPolynomial::variable();
  const RatPolynomial num = var * var - RatPolynomial(1);
  const RatPolynomial den = var - RatPolynomial(1);
  CHECK(exact_divide(num, den) == var + RatPolynomial(1));
  CHECK_THROWS_AS(exact_divide(var * var + RatPolynomial(1), var), nonzero_remainder);
  CHECK_THROWS_AS(exact_divide(var, RatPolynomial()), validation_error);
}

TEST_CASE("exact division round trip on random factors") {
  for (int i = 0; i < 100; ++i) {
    const RatPolynomial a = random_polynomial(5);
    RatPolynomial b = random_polynomial(4);
    if (b.is_zero()) b = RatPolynomial(1);
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("interpolation examples") {
  CHECK(lagrange_interpolate({{0, BigRational(1)}, {1, BigRational(2)}}) ==
        RatPolynomial::variable() + RatPolynomial(1));
  CHECK(lagrange_interpolate({{0, BigRational(0)}, {1, BigRational(1)}, {2, BigRational(4)}}) ==
        RatPolynomial::variable() * RatPolynomial::variable());
  CHECK_THROWS_AS(lagrange_interpolate({{3, BigRational(1)}, {3, BigRational(2)}}),
                  duplicate_abscissa);
  CHECK_THROWS_AS(lagrange_interpolate({}), validation_error);
}

TEST_CASE("interpolation recovers the k=1 moment polynomial from 8 samples") {
  // N(1+2N)(N+1)/6, sampled at N = 0..7.
  const RatPolynomial var = RatPolynomial::variable();
  const RatPolynomial cubic =
      var * (RatPolynomial(1) + var * BigRational(2)) * (var + RatPolynomial(1)) *
      BigRational(1, 6);
  std::vector<std::pair<long, BigRational>> pts;
  for (long n = 0; n < 8; ++n) pts.emplace_back(n, cubic.evaluate(n));
  CHECK(lagrange_interpolate(pts) == cubic);
}

TEST_CASE("interpolation round trip on random polynomials") {
  for (int i = 0; i < 60; ++i) {
    const RatPolynomial p = random_polynomial(6);
    std::vector<std::pair<long, BigRational>> pts;
    for (long n = -3; n <= p.degree() - 3; ++n) pts.emplace_back(n, p.evaluate(n));
    pts.emplace_back(100, p.evaluate(100));
    CHECK(lagrange_interpolate(pts) == p);
  }
}

TEST_CASE("series exp and multiply examples") {
  TaylorSeries<BigRational> t(1, 3);
  t.set_coefficient(1, 0, BigRational(1));
  const auto e = t.exp();
  CHECK(e.coefficient(0) == BigRational(1));
  CHECK(e.coefficient(1) == BigRational(1));
  CHECK(e.coefficient(2) == BigRational(1, 2));
  CHECK(e.coefficient(3) == BigRational(1, 6));

  TaylorSeries<BigRational> a(2, 1, 1), b(2, 1, 1);
  a.set_coefficient(0, 0, BigRational(1));
  a.set_coefficient(1, 0, BigRational(1));
  b.set_coefficient(0, 0, BigRational(1));
  b.set_coefficient(0, 1, BigRational(1));
  const auto prod = a * b;
  CHECK(prod.coefficient(0, 0) == BigRational(1));
  CHECK(prod.coefficient(1, 0) == BigRational(1));
  CHECK(prod.coefficient(0, 1) == BigRational(1));
  CHECK(prod.coefficient(1, 1) == BigRational(1));
}

TEST_CASE("series with symbolic coefficients: exp(-Nt)") {
  TaylorSeries<RatPolynomial> s(1, 3);
  s.set_coefficient(1, 0, -RatPolynomial::variable());
  const auto e = s.exp();
  const RatPolynomial half_n_squared =
      RatPolynomial::monomial(BigRational(1, 2), 2);
  CHECK(e.coefficient(2) == half_n_squared);
}

TEST_CASE("series truncation is a hard boundary") {
  TaylorSeries<BigRational> t(1, 2);
  t.set_coefficient(1, 0, BigRational(1));
  CHECK(t.coefficient(2) == BigRational(0));
  CHECK_THROWS_AS(t.coefficient(3), truncation_exceeded);
  CHECK_THROWS_AS(t.set_coefficient(3, 0, BigRational(1)), truncation_exceeded);
  TaylorSeries<BigRational> with_constant(1, 2);
  with_constant.set_coefficient(0, 0, BigRational(1));
  CHECK_THROWS_AS(with_constant.exp(), validation_error);
}

TEST_CASE("exp(a) exp(-a) = 1 to truncation") {
  for (int trial = 0; trial < 40; ++trial) {
    TaylorSeries<BigRational> a(1, 5);
    for (int i = 1; i <= 5; ++i) a.set_coefficient(i, 0, random_rational());
    const auto product = a.exp() * (-a).exp();
    CHECK(product.coefficient(0) == BigRational(1));
    for (int i = 1; i <= 5; ++i) CHECK(product.coefficient(i) == BigRational(0));
  }
  for (int trial = 0; trial < 15; ++trial) {
    TaylorSeries<BigRational> a(2, 3, 3);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (i + j > 0) a.set_coefficient(i, j, random_rational());
    const auto product = a.exp() * (-a).exp();
    CHECK(product.coefficient(0, 0) == BigRational(1));
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (i + j > 0) CHECK(product.coefficient(i, j) == BigRational(0));
  }
}

TEST_CASE("rational polynomial JSON-style coefficient strings") {
  const RatPolynomial f1 = RatPolynomial::from_coefficients(
      {BigRational(0), BigRational(1, 6), BigRational(1, 3)});
  const auto strings = f1.coefficient_strings();
  REQUIRE(strings.size() == 3);
  CHECK(strings[0] == "0");
  CHECK(strings[1] == "1/6");
  CHECK(strings[2] == "1/3");
  CHECK(RatPolynomial::from_coefficient_strings(strings) == f1);
}
