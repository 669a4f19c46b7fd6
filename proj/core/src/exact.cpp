#include "wplat/exact.hpp"

namespace wplat {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace wplat
