#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuem/moments.hpp"
#include "cuem/polynomial.hpp"

namespace cuem {

// Univariate polynomial over Z_p for prime p, residues in [0, p), no trailing
// zeros mod p. Comparison is coefficientwise; exponents are never reduced
// (N^p = N holds pointwise, not as polynomials).
class ModPolynomial {
public:
  ModPolynomial() = default;
  ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> ascending);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coefficient(int i) const;
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) = default;

  std::string str(const std::string& symbol = "N") const;

private:
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
};

bool is_prime(std::uint64_t m);

// Multiplies poly by p, requires every resulting coefficient denominator to
// be coprime to p (the moment's denominators carry exactly one power of p),
// and reduces to Z_p[N] with denominators as inverses mod p.
ModPolynomial clear_and_reduce(const RatPolynomial& poly, std::uint64_t p);

// Right side of the mod-(4k-1) factorization:
// (-2) (N-2k+1)...(N) ((k-1)!)^{-2} times the |Lambda(1)| moment, mod 4k-1.
ModPolynomial theorem_rhs(int k);

struct ModCheckReport {
  bool holds = false;
  std::uint64_t p = 0;
  ModPolynomial lhs;
  ModPolynomial rhs;
};

// lhs = clear_and_reduce(deriv_moment_poly(k), 4k-1) against theorem_rhs(k),
// compared coefficientwise in Z_p[N].
ModCheckReport verify_mod_theorem(int k, MomentMethod method = MomentMethod::painleve,
                                  int threads = 1);

// Exponent of p in the lcm of the coefficient denominators.
int p_power_in_denominators(const RatPolynomial& poly, std::uint64_t p);

}  // namespace cuem
