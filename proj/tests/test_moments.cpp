#include <doctest.h>

#include <cmath>

#include "cuem/errors.hpp"
#include "cuem/moments.hpp"
#include "cuem/n2.hpp"
#include "cuem/painleve.hpp"

using namespace cuem;

namespace {

// Independent k = 1 oracle valid for every q: E|Lambda'(x)|^2 equals
// sum_{j=1..N} j^2 q^{j-1} because the secular coefficients of the
// characteristic polynomial are Haar-orthonormal.
BigRational k1_oracle(long n, const BigRational& q) {
  BigRational sum(0);
  for (long j = 1; j <= n; ++j) sum += BigRational(j * j) * pow(q, j - 1);
  return sum;
}

const RatPolynomial kVar = RatPolynomial::variable();

RatPolynomial k1_moment_poly() {
  // N(N+1)(2N+1)/6
  return kVar * (kVar + RatPolynomial(1)) * (kVar * BigRational(2) + RatPolynomial(1)) *
         BigRational(1, 6);
}

}  // namespace

TEST_CASE("charpoly moment values") {
  CHECK(charpoly_moment(2, 1) == BigRational(3));
  CHECK(charpoly_moment(7, 0) == BigRational(1));
  CHECK(charpoly_moment(1, 3) == BigRational(20));  // Gamma(7)/Gamma(4)^2
  CHECK_THROWS_AS(charpoly_moment(0, 1), validation_error);
}

TEST_CASE("charpoly moment polynomial matches the value form") {
  for (int k = 0; k <= 4; ++k) {
    const RatPolynomial p = charpoly_moment_poly(k);
    CHECK(p.degree() == k * k);
    for (long n = 1; n <= 8; ++n) CHECK(p.evaluate(n) == charpoly_moment(n, k));
  }
  CHECK(charpoly_moment_poly(1) == kVar + RatPolynomial(1));
}

TEST_CASE("composition-sum moment examples") {
  CHECK(deriv_moment_sumofdets(2, 1) == BigRational(5));
  CHECK(deriv_moment_sumofdets(9, 0) == BigRational(1));
  CHECK(deriv_moment_sumofdets(5, 1) == BigRational(55));
  // k = 1 closed form across small N, including N = 0 and 1.
  for (long n = 0; n <= 12; ++n)
    CHECK(deriv_moment_sumofdets(n, 1) == k1_moment_poly().evaluate(n));
}

TEST_CASE("laguerre k x k route") {
  CHECK(deriv_moment_laguerre_k(2, 1) == BigRational(5));
  CHECK(deriv_moment_laguerre_k(3, 0) == BigRational(1));
  CHECK(deriv_moment_laguerre_k(4, 2) == deriv_moment_sumofdets(4, 2));
  // N below k-1 exercises the n < 0 cutoff entries.
  CHECK(deriv_moment_laguerre_k(1, 3) == deriv_moment_sumofdets(1, 3));
}

TEST_CASE("laguerre k x k route, symbolic N") {
  CHECK(deriv_moment_laguerre_k_symbolic(1) == k1_moment_poly());
  CHECK(deriv_moment_laguerre_k_symbolic(2) ==
        deriv_moment_poly(2, MomentMethod::sumofdets));
}

TEST_CASE("laguerre N x N dual route") {
  CHECK(deriv_moment_laguerre_n(1, 1) == BigRational(1));
  CHECK(deriv_moment_laguerre_n(2, 1) == BigRational(5));
  CHECK(deriv_moment_laguerre_n(3, 2) == deriv_moment_sumofdets(3, 2));
  CHECK(deriv_moment_laguerre_n(6, 1) == BigRational(91));  // sum of j^2, j = 1..6
}

TEST_CASE("cross-method equality on a small grid") {
  for (long n = 1; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k) {
      const BigRational reference = deriv_moment_sumofdets(n, k);
      CHECK(deriv_moment_laguerre_k(n, k) == reference);
      CHECK(deriv_moment_laguerre_n(n, k) == reference);
      CHECK(painleve_moment(n, k) == reference);
    }
}

TEST_CASE("general-x route") {
  for (const BigRational& q : {BigRational(1, 2), BigRational(4), BigRational(0)}) {
    CHECK(deriv_moment_general_x(1, 1, q) == BigRational(1));
  }
  CHECK(deriv_moment_general_x(2, 0, BigRational(1, 2)) == BigRational(1));
  CHECK_THROWS_AS(deriv_moment_general_x(2, 1, BigRational(1)), q_equals_one);
  CHECK_THROWS_AS(deriv_moment_general_x(2, 1, BigRational(-1)), validation_error);

  for (long n = 1; n <= 5; ++n)
    for (const BigRational& q : {BigRational(1, 4), BigRational(4), BigRational(9, 2)})
      CHECK(deriv_moment_general_x(n, 1, q) == k1_oracle(n, q));

  // Against the U(2) closed form at higher k; q = 0 is the moment at the
  // centre of the disc, a Catalan number.
  for (int k = 1; k <= 3; ++k)
    for (const BigRational& q : {BigRational(0), BigRational(1, 4), BigRational(4)})
      CHECK(deriv_moment_general_x(2, k, q) == u2_moment_sum(k, q));
}

TEST_CASE("general-x approaches the circle value as q -> 1") {
  const BigRational target = deriv_moment_laguerre_k(3, 1);
  const double target_d = target.to_double();
  for (const int sign : {-1, 1}) {
    double previous_gap = 0.0;
    for (int i = 1; i <= 4; ++i) {
      BigRational eps(1, 1);
      for (int p = 0; p < i; ++p) eps /= BigRational(10);
      const BigRational q =
          sign > 0 ? BigRational(1) + eps : BigRational(1) - eps;
      const double gap = std::abs(deriv_moment_general_x(3, 1, q).to_double() - target_d);
      if (i > 1) CHECK(gap < previous_gap + 1e-6);
      previous_gap = gap;
    }
    CHECK(previous_gap < 3e-3);
  }
}

TEST_CASE("moment polynomial and f ratio") {
  const RatPolynomial p1 = deriv_moment_poly(1, MomentMethod::sumofdets);
  CHECK(p1 == k1_moment_poly());
  CHECK(p1.leading_coefficient() == BigRational(1, 3));

  const RatPolynomial f1 = f_ratio(1, MomentMethod::sumofdets);
  CHECK(f1 == RatPolynomial::from_coefficients(
                  {BigRational(0), BigRational(1, 6), BigRational(1, 3)}));

  const RatPolynomial f2 = f_ratio(2, MomentMethod::laguerre_k);
  CHECK(f2 == RatPolynomial::from_coefficients({BigRational(0), BigRational(12, 840),
                                                BigRational(27, 840), BigRational(40, 840),
                                                BigRational(61, 840)}));

  CHECK_THROWS_AS(deriv_moment_poly(1, MomentMethod::laguerre_n), validation_error);
  CHECK_THROWS_AS(deriv_moment_poly(1, MomentMethod::general_x), validation_error);
}

TEST_CASE("degree contract of the moment polynomial") {
  for (int k = 1; k <= 3; ++k) {
    const RatPolynomial p = deriv_moment_poly(k, MomentMethod::laguerre_k);
    CHECK(p.degree() == k * k + 2 * k);
    const RatPolynomial f = f_ratio(k, MomentMethod::laguerre_k);
    CHECK(f.degree() == 2 * k);
    CHECK(f.constant_term().is_zero());
  }
}

TEST_CASE("deriv_moment dispatcher validates q") {
  CHECK(deriv_moment(2, 1, MomentMethod::sumofdets) == BigRational(5));
  CHECK(deriv_moment(2, 1, MomentMethod::general_x, BigRational(4)) ==
        u2_moment_sum(1, BigRational(4)));
  CHECK_THROWS_AS(deriv_moment(2, 1, MomentMethod::painleve, BigRational(4)), validation_error);
}

TEST_CASE("bessel-determinant leading coefficient") {
  CHECK(b_k_leading(1) == BigRational(1, 3));
  CHECK(b_k_leading(2) == deriv_moment_poly(2, MomentMethod::laguerre_k).leading_coefficient());
}

TEST_CASE("roots of f(N,1)") {
  const auto roots = roots_of_f(1);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(roots[0].imag() == 0.0);
  CHECK(roots[1].real() == 0.0);
  CHECK(roots[1].imag() == 0.0);
}

TEST_CASE("roots of f(N,k) come conjugate-closed with two real members") {
  for (int k = 2; k <= 3; ++k) {
    const auto roots = roots_of_f(k);
    REQUIRE(roots.size() == static_cast<std::size_t>(2 * k));
    int reals = 0, zeros = 0;
    for (const auto& r : roots) {
      if (r.imag() == 0.0) ++reals;
      if (r == std::complex<double>(0.0, 0.0)) ++zeros;
    }
    CHECK(reals == 2);
    CHECK(zeros == 1);
    for (const auto& r : roots) {
      const bool paired =
          std::find(roots.begin(), roots.end(), std::conj(r)) != roots.end();
      CHECK(paired);
    }
  }
}
