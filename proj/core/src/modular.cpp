#include "cuem/modular.hpp"

#include <sstream>

#include "cuem/errors.hpp"

namespace cuem {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = r * base % p;  // p <= 31 here, no overflow concerns
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw contract_error("inverse of 0 mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

ModPolynomial::ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> ascending)
    : p_(p), c_(std::move(ascending)) {
  if (p_ < 2) throw validation_error("modulus must be at least 2");
  for (auto& c : c_) c %= p_;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.p_ != b.p_) throw validation_error("moduli differ");
  if (a.c_.empty() || b.c_.empty()) return ModPolynomial(a.p_, {});
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  return ModPolynomial(a.p_, std::move(r));
}

std::string ModPolynomial::str(const std::string& symbol) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << " ";
      os << symbol;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

ModPolynomial clear_and_reduce(const RatPolynomial& poly, std::uint64_t p) {
  if (!is_prime(p)) throw validation_error("modulus " + std::to_string(p) + " is not prime");
  const RatPolynomial cleared = poly * BigRational(static_cast<long>(p));
  std::vector<std::uint64_t> residues;
  residues.reserve(static_cast<std::size_t>(cleared.degree()) + 1);
  for (int i = 0; i <= cleared.degree(); ++i) {
    const BigRational& c = cleared.coefficient(i);
    const std::uint64_t den = reduce_mpz(c.denominator(), p);
    if (den == 0) throw residual_p_denominator(p);
    residues.push_back(reduce_mpz(c.numerator(), p) * mod_inverse(den, p) % p);
  }
  return ModPolynomial(p, std::move(residues));
}

ModPolynomial theorem_rhs(int k) {
  if (k < 1) throw validation_error("the factorization needs k >= 1");
  const std::uint64_t p = 4 * static_cast<std::uint64_t>(k) - 1;
  if (!is_prime(p)) throw not_prime(p);

  ModPolynomial product(p, {1});
  for (int j = 0; j < 2 * k; ++j) {
    // N - j mod p
    const std::uint64_t cj = (p - static_cast<std::uint64_t>(j) % p) % p;
    product = product * ModPolynomial(p, {cj, 1});
  }

  const RatPolynomial charpoly = charpoly_moment_poly(k);
  std::vector<std::uint64_t> cp;
  cp.reserve(static_cast<std::size_t>(charpoly.degree()) + 1);
  for (int i = 0; i <= charpoly.degree(); ++i) {
    const BigRational& c = charpoly.coefficient(i);
    const std::uint64_t den = reduce_mpz(c.denominator(), p);
    if (den == 0) throw residual_p_denominator(p);
    cp.push_back(reduce_mpz(c.numerator(), p) * mod_inverse(den, p) % p);
  }

  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k - 1));
  const std::uint64_t inv_fact = mod_inverse(reduce_mpz(fact, p), p);
  const std::uint64_t scale = (p - 2) * inv_fact % p * inv_fact % p;  // -2 / ((k-1)!)^2

  return product * ModPolynomial(p, cp) * ModPolynomial(p, {scale});
}

ModCheckReport verify_mod_theorem(int k, MomentMethod method, int threads) {
  if (k < 1) throw validation_error("the factorization needs k >= 1");
  const std::uint64_t p = 4 * static_cast<std::uint64_t>(k) - 1;
  if (!is_prime(p)) throw not_prime(p);

  ModCheckReport report;
  report.p = p;
  report.lhs = clear_and_reduce(deriv_moment_poly(k, method, threads), p);
  report.rhs = theorem_rhs(k);
  report.holds = (report.lhs == report.rhs);
  return report;
}

int p_power_in_denominators(const RatPolynomial& poly, std::uint64_t p) {
  mpz_class lcm(1);
  for (int i = 0; i <= poly.degree(); ++i) {
    const mpz_class den = poly.coefficient(i).denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  int count = 0;
  mpz_class pz(static_cast<unsigned long>(p));
  while (mpz_divisible_p(lcm.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(lcm.get_mpz_t(), lcm.get_mpz_t(), pz.get_mpz_t());
    ++count;
  }
  return count;
}

}  // namespace cuem
