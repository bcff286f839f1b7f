#include "cuem/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "cuem/errors.hpp"

namespace cuem {

namespace {
const BigRational kZero(0);
}

RatPolynomial::RatPolynomial(const BigRational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

RatPolynomial RatPolynomial::from_coefficients(std::vector<BigRational> ascending) {
  RatPolynomial p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

RatPolynomial RatPolynomial::variable() { return monomial(BigRational(1), 1); }

RatPolynomial RatPolynomial::monomial(const BigRational& c, int degree) {
  RatPolynomial p;
  if (!c.is_zero()) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, BigRational(0));
    p.c_.back() = c;
  }
  return p;
}

const BigRational& RatPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const BigRational& RatPolynomial::leading_coefficient() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

BigRational RatPolynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigRational(static_cast<long>(i)));
  return from_coefficients(std::move(d));
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPolynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

RatPolynomial operator*(const RatPolynomial& a, const BigRational& s) {
  if (s.is_zero()) return {};
  RatPolynomial r(a);
  for (auto& c : r.c_) c *= s;
  return r;
}

RatPolynomial exact_divide(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw validation_error("polynomial division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw nonzero_remainder();

  std::vector<BigRational> rem = num.coefficients();
  std::vector<BigRational> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1,
                             BigRational(0));
  const BigRational& lead = den.leading_coefficient();
  for (int i = num.degree() - den.degree(); i >= 0; --i) {
    BigRational f = rem[static_cast<std::size_t>(i + den.degree())] / lead;
    q[static_cast<std::size_t>(i)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[static_cast<std::size_t>(i + j)] -= f * den.coefficient(j);
  }
  for (const auto& c : rem)
    if (!c.is_zero()) throw nonzero_remainder();
  return RatPolynomial::from_coefficients(std::move(q));
}

std::vector<std::string> RatPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

RatPolynomial RatPolynomial::from_coefficient_strings(const std::vector<std::string>& s) {
  std::vector<BigRational> c;
  c.reserve(s.size());
  for (const auto& t : s) c.push_back(BigRational::from_string(t));
  return from_coefficients(std::move(c));
}

std::string RatPolynomial::str(const std::string& symbol) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << (c_[i].sign() < 0 ? " - " : " + ");
    else if (c_[i].sign() < 0) os << "-";
    BigRational a = abs(c_[i]);
    if (i == 0 || a != BigRational(1)) os << a.str();
    if (i > 0) {
      if (a != BigRational(1)) os << " ";
      os << symbol;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) { return os << p.str(); }

}  // namespace cuem
