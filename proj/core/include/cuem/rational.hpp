#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace cuem {

// Arbitrary-precision signed rational, the scalar of all exact computation.
// Always stored reduced with positive denominator; zero is 0/1. Equality is
// therefore structural.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit for integer literals
  BigRational(long num, long den);
  explicit BigRational(const mpz_class& n) : v_(n) {}
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class v);

  // Parses "num/den" or "num" in base 10.
  static BigRational from_string(const std::string& s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // True when the value is an integer that fits in long.
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  long to_long() const { return v_.get_num().get_si(); }
  double to_double() const { return v_.get_d(); }

  // "num/den" in base 10, denominator omitted when 1.
  std::string str() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.v_, b.v_);
    return c <=> 0;
  }

private:
  mpq_class v_;
};

BigRational abs(const BigRational& x);
BigRational pow(const BigRational& x, long e);

// n! as an exact integer value.
BigRational factorial(unsigned long n);

std::ostream& operator<<(std::ostream& os, const BigRational& x);

}  // namespace cuem
