#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wplat/exact.hpp"

namespace wplat {

/// Truncated bivariate power series
///
///     sum_{n <= N, r <= M} c[n][r] * x^n / n! * y^r
///
/// exponential in x, ordinary in y. Coefficients outside the box are zero and
/// are never consulted by any operation. Values are immutable once built.
class BivariateSeries {
 public:
  /// The zero series on the box [0, x_order] x [0, y_order].
  BivariateSeries(int x_order, int y_order);

  /// Row-major coefficients, `coeffs.size() == (x_order + 1) * (y_order + 1)`.
  BivariateSeries(int x_order, int y_order, std::vector<BigRational> coeffs);

  static BivariateSeries from_function(int x_order, int y_order,
                                       const std::function<BigRational(int n, int r)>& coeff);
  static BivariateSeries constant(int x_order, int y_order, const BigRational& c);

  int x_order() const { return x_order_; }
  int y_order() const { return y_order_; }

  /// Zero outside the truncation box.
  const BigRational& coeff(int n, int r) const;

  /// The integer coefficients of the x^n/n! row; throws if any is fractional.
  std::vector<BigInt> integer_row(int n) const;

  bool all_integer() const;
  bool has_zero_constant_row() const;  // c[0][r] == 0 for every r
  bool has_unit_constant_row() const;  // c[0][0] == 1, c[0][r>0] == 0
  bool is_univariate() const;          // c[n][r>0] == 0 for every n

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  std::size_t index(int n, int r) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(y_order_ + 1) + static_cast<std::size_t>(r);
  }

  int x_order_;
  int y_order_;
  std::vector<BigRational> coeffs_;
};

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
/// EGF product in x, ordinary convolution in y. Both operands share one box.
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
/// Multiply by y (drops the y^M row that leaves the box).
BivariateSeries shift_y(const BivariateSeries& f);

/// exp(f); f must have a zero constant row.
BivariateSeries series_exp(const BivariateSeries& f);
/// log(f); f must have constant row exactly 1.
BivariateSeries series_log(const BivariateSeries& f);
/// f^y = exp(y log f); f must be univariate in x with constant term 1.
BivariateSeries series_pow_y(const BivariateSeries& f);

/// exp^(k)(x, y) = exp(y * exp^(k-1)(x)), with exp^(0)(x) = e^x - 1 and
/// exp^(j)(x) = exp(exp^(j-1)(x)) - 1. Coefficient (n, r) is T(n, k, r).
BivariateSeries exp_k_xy(int k, int x_order, int y_order);
inline BivariateSeries exp_k_xy(int k, int x_order) { return exp_k_xy(k, x_order, x_order); }

/// log^(k)(x, y) = (log^(k)(x))^y, with log^(0)(x) = e^x and
/// log^(j)(x) = 1 + log(log^(j-1)(x)). Coefficient (n, r) is t(n, k, r).
BivariateSeries log_k_xy(int k, int x_order, int y_order);
inline BivariateSeries log_k_xy(int k, int x_order) { return log_k_xy(k, x_order, x_order); }

/// Canonical text: one line per n, coefficients r = 0..M separated by single spaces.
std::string to_text(const BivariateSeries& f);
/// Canonical JSON: {"x_order":N,"y_order":M,"rows":[[...],...]}; integer
/// coefficients are JSON numbers when they fit in 64 bits, otherwise strings.
std::string to_json(const BivariateSeries& f);

}  // namespace wplat
