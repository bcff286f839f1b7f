#pragma once

#include <stdexcept>
#include <string>

namespace cuem {

// Two severities. validation_error: the caller asked for something outside an
// operation's domain (CLI exit code 1). contract_error: an internal invariant
// that should hold by theorem or by construction failed (CLI exit code 2).
class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class contract_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct duplicate_abscissa final : validation_error {
  explicit duplicate_abscissa(long x)
      : validation_error("duplicate interpolation abscissa " + std::to_string(x)) {}
};

struct nonzero_remainder final : contract_error {
  nonzero_remainder() : contract_error("polynomial division left a nonzero remainder") {}
};

struct truncation_exceeded final : contract_error {
  truncation_exceeded(int wanted, int order)
      : contract_error("series coefficient of order " + std::to_string(wanted) +
                       " requested beyond truncation order " + std::to_string(order)) {}
};

struct dimension_mismatch final : validation_error {
  dimension_mismatch(std::size_t got, std::size_t want)
      : validation_error("vector of length " + std::to_string(got) +
                         " where length " + std::to_string(want) + " expected") {}
};

struct non_terminating final : validation_error {
  non_terminating()
      : validation_error("3F2 series does not terminate: no upper parameter is a "
                         "non-positive integer") {}
};

struct pochhammer_pole final : validation_error {
  explicit pochhammer_pole(const std::string& b)
      : validation_error("lower parameter " + b +
                         " hits a non-positive integer before the series terminates") {}
};

struct convergence_condition_violated final : validation_error {
  explicit convergence_condition_violated(double margin)
      : validation_error("3F2 at z = 1 requires Re(b1+b2-a1-a2-a3) > 0, got " +
                         std::to_string(margin)) {}
};

struct slow_convergence final : contract_error {
  slow_convergence() : contract_error("3F2 summation hit the term cap before converging") {}
};

struct q_equals_one final : validation_error {
  q_equals_one()
      : validation_error("the general-|x| formula excludes |x|^2 = 1; use the "
                         "Laguerre-determinant method instead") {}
};

struct degenerate_pivot final : contract_error {
  degenerate_pivot(int j, long n, int k)
      : contract_error("coefficient equation at order " + std::to_string(j) +
                       " is degenerate (N = " + std::to_string(n) +
                       ", k = " + std::to_string(k) + ")") {}
};

struct residual_p_denominator final : contract_error {
  residual_p_denominator(unsigned long p)
      : contract_error("a coefficient denominator retains a factor " + std::to_string(p) +
                       " after one multiplication by p") {}
};

struct not_prime final : validation_error {
  explicit not_prime(unsigned long m)
      : validation_error("4k-1 = " + std::to_string(m) + " is not prime") {}
};

struct size_too_large final : validation_error {
  size_too_large(int n, int cap)
      : validation_error("matrix size " + std::to_string(n) + " exceeds the documented cap " +
                         std::to_string(cap)) {}
};

struct root_finding_failure final : contract_error {
  root_finding_failure()
      : contract_error("simultaneous root iteration did not converge within the cap") {}
};

}  // namespace cuem
