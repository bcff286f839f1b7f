#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuem/rational.hpp"

namespace cuem {

// Dense univariate polynomial over BigRational, coefficients stored by
// ascending degree with no trailing zeros. The zero polynomial has degree -1.
// The indeterminate is written N throughout (the matrix size), except where a
// function documents otherwise (Laguerre polynomials use it for t).
class RatPolynomial {
public:
  RatPolynomial() = default;  // zero polynomial
  RatPolynomial(const BigRational& constant);  // NOLINT: implicit constant lift
  RatPolynomial(long constant) : RatPolynomial(BigRational(constant)) {}

  static RatPolynomial from_coefficients(std::vector<BigRational> ascending);
  static RatPolynomial variable();  // the monomial N
  static RatPolynomial monomial(const BigRational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of N^i; zero beyond the stored degree.
  const BigRational& coefficient(int i) const;
  const BigRational& leading_coefficient() const;
  BigRational constant_term() const { return coefficient(0); }
  const std::vector<BigRational>& coefficients() const { return c_; }

  BigRational evaluate(const BigRational& x) const;
  BigRational evaluate(long x) const { return evaluate(BigRational(x)); }

  RatPolynomial derivative() const;

  RatPolynomial operator-() const;
  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const BigRational& s);
  friend RatPolynomial operator*(const BigRational& s, const RatPolynomial& a) { return a * s; }
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

  // Ascending coefficient strings in the rational encoding ("num/den").
  std::vector<std::string> coefficient_strings() const;
  static RatPolynomial from_coefficient_strings(const std::vector<std::string>& s);

  // Human-readable form like "1/6 N + 1/3 N^2".
  std::string str(const std::string& symbol = "N") const;

private:
  void trim();
  std::vector<BigRational> c_;
};

// Exact quotient num/den; throws nonzero_remainder when the division is not
// exact and validation_error when den is zero.
RatPolynomial exact_divide(const RatPolynomial& num, const RatPolynomial& den);

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

}  // namespace cuem
