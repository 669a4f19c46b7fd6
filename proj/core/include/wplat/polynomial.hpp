#pragma once

#include <string>
#include <vector>

#include "wplat/exact.hpp"

namespace wplat {

/// Dense integer polynomial in x; coeffs[i] multiplies x^i, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial x_minus(const BigInt& root);  // x - root

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt eval(const BigInt& x) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// "x^3 - 6x^2 + 8x"
std::string to_string(const Polynomial& p);

}  // namespace wplat
