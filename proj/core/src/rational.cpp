#include "cuem/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "cuem/errors.hpp"

namespace cuem {

BigRational::BigRational(long num, long den) : v_(num, den) {
  if (den == 0) throw validation_error("rational with zero denominator");
  v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw validation_error("rational with zero denominator");
  v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw validation_error("rational with zero denominator");
  v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw validation_error("cannot parse rational '" + s + "'");
  if (sgn(v.get_den()) == 0) throw validation_error("rational with zero denominator");
  v.canonicalize();
  return BigRational(std::move(v));
}

std::string BigRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw validation_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw validation_error("zero to a negative power");
    return pow(BigRational(1) / x, -e);
  }
  BigRational r(1), base(x);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigRational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

}  // namespace cuem
