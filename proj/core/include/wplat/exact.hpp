#pragma once

#include <gmpxx.h>

#include <string>

namespace wplat {

/// Arbitrary-precision integer. Every count in the library is one of these.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using BigRational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// (-1)^e as a BigInt.
inline BigInt sign_power(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

}  // namespace wplat
