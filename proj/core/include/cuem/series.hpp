#pragma once

#include <map>
#include <utility>

#include "cuem/errors.hpp"
#include "cuem/rational.hpp"

namespace cuem {

// Truncated power series in one variable t or two variables (t1, t2), sparse
// over exponent tuples. Coeff is BigRational for concrete computations and
// RatPolynomial when N stays symbolic. Arithmetic never manufactures
// coefficients beyond the truncation orders; requesting one is a hard error.
template <class Coeff>
class TaylorSeries {
public:
  TaylorSeries(int vars, int order0, int order1 = 0) : vars_(vars), trunc_{order0, order1} {
    if (vars != 1 && vars != 2) throw validation_error("series must have 1 or 2 variables");
    if (order0 < 0 || order1 < 0) throw validation_error("negative truncation order");
  }

  static TaylorSeries constant(const Coeff& c, int vars, int order0, int order1 = 0) {
    TaylorSeries s(vars, order0, order1);
    s.set_coefficient(0, 0, c);
    return s;
  }

  int variables() const { return vars_; }
  int truncation_order(int var) const { return trunc_[var]; }

  void set_coefficient(int i, int j, Coeff c) {
    check_within(i, j);
    if (is_zero_coeff(c))
      c_.erase({i, j});
    else
      c_[{i, j}] = std::move(c);
  }

  // Exact stored coefficient, zero if absent and within truncation.
  Coeff coefficient(int i, int j = 0) const {
    check_within(i, j);
    auto it = c_.find({i, j});
    return it == c_.end() ? Coeff(0) : it->second;
  }

  bool is_zero() const { return c_.empty(); }

  TaylorSeries operator-() const {
    TaylorSeries r(*this);
    for (auto& [e, c] : r.c_) c = Coeff(0) - c;
    return r;
  }

  friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r = a.restricted(min_orders(a, b));
    for (const auto& [e, c] : b.c_)
      if (e.first <= r.trunc_[0] && e.second <= r.trunc_[1])
        r.set_coefficient(e.first, e.second, r.coefficient(e.first, e.second) + c);
    return r;
  }

  friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    return a + (-b);
  }

  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    auto [t0, t1] = min_orders(a, b);
    TaylorSeries r(a.vars_, t0, t1);
    for (const auto& [ea, ca] : a.c_) {
      if (ea.first > t0 || ea.second > t1) continue;
      for (const auto& [eb, cb] : b.c_) {
        int i = ea.first + eb.first, j = ea.second + eb.second;
        if (i > t0 || j > t1) continue;
        auto it = r.c_.find({i, j});
        if (it == r.c_.end())
          r.c_[{i, j}] = ca * cb;
        else
          it->second = it->second + ca * cb;
      }
    }
    r.drop_zeros();
    return r;
  }

  TaylorSeries operator*(const BigRational& s) const {
    TaylorSeries r(*this);
    if (s.is_zero()) {
      r.c_.clear();
      return r;
    }
    for (auto& [e, c] : r.c_) c = c * s;
    return r;
  }

  // exp of a series with zero constant term, to the same truncation.
  TaylorSeries exp() const {
    if (!is_zero_coeff(coefficient(0, 0)))
      throw validation_error("series_exp requires a zero constant term");
    TaylorSeries acc = constant(Coeff(1), vars_, trunc_[0], trunc_[1]);
    TaylorSeries power = acc;
    BigRational inv_fact(1);
    const int steps = trunc_[0] + trunc_[1];
    for (int n = 1; n <= steps; ++n) {
      power = power * (*this);
      if (power.is_zero()) break;
      inv_fact /= BigRational(n);
      acc = acc + power * inv_fact;
    }
    return acc;
  }

  friend bool operator==(const TaylorSeries& a, const TaylorSeries& b) {
    return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

private:
  static bool is_zero_coeff(const Coeff& c) { return c.is_zero(); }

  static std::pair<int, int> min_orders(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.vars_ != b.vars_) throw validation_error("series variable counts differ");
    return {a.trunc_[0] < b.trunc_[0] ? a.trunc_[0] : b.trunc_[0],
            a.trunc_[1] < b.trunc_[1] ? a.trunc_[1] : b.trunc_[1]};
  }

  TaylorSeries restricted(std::pair<int, int> orders) const {
    TaylorSeries r(vars_, orders.first, orders.second);
    for (const auto& [e, c] : c_)
      if (e.first <= orders.first && e.second <= orders.second) r.c_[e] = c;
    return r;
  }

  void check_within(int i, int j) const {
    if (i < 0 || j < 0) throw validation_error("negative series exponent");
    if (i > trunc_[0]) throw truncation_exceeded(i, trunc_[0]);
    if (j > trunc_[1]) throw truncation_exceeded(j, trunc_[1]);
  }

  void drop_zeros() {
    for (auto it = c_.begin(); it != c_.end();)
      it = is_zero_coeff(it->second) ? c_.erase(it) : std::next(it);
  }

  int vars_;
  std::array<int, 2> trunc_;
  std::map<std::pair<int, int>, Coeff> c_;
};

}  // namespace cuem
