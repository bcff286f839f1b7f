#include "cuem/binomial.hpp"

namespace cuem {

BigRational generalized_binomial(long top, unsigned r) {
  mpz_class num(1);
  for (unsigned i = 0; i < r; ++i) num *= top - static_cast<long>(i);
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), r);
  return BigRational(num, den);
}

RatPolynomial generalized_binomial(const RatPolynomial& top, unsigned r) {
  RatPolynomial num(BigRational(1));
  for (unsigned i = 0; i < r; ++i) num = num * (top - RatPolynomial(static_cast<long>(i)));
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), r);
  return num * BigRational(mpz_class(1), den);
}

BigRational multinomial(const std::vector<unsigned>& parts) {
  unsigned long total = 0;
  for (unsigned p : parts) total += p;
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), total);
  mpz_class den(1), f;
  for (unsigned p : parts) {
    mpz_fac_ui(f.get_mpz_t(), p);
    den *= f;
  }
  return BigRational(num, den);
}

}  // namespace cuem
