#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace cprsa {

/// Arbitrary-precision signed integer. Every integral quantity in the
/// library (moduli, exponents, coefficients, lattice entries) is one of these.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Number of bits in |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow2(unsigned long exponent);
BigInt isqrt(const BigInt& x);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& x);

/// Exact quotient; throws std::domain_error when `den` does not divide `num`.
BigInt divide_exact(const BigInt& num, const BigInt& den);

std::string to_decimal(const BigInt& x);
/// Strict decimal parse (optional leading '-'); throws std::invalid_argument.
BigInt from_decimal(std::string_view text);

Rational make_rational(long num, long den);
/// Parses "p/q", an integer, or a finite decimal such as "0.3" exactly.
Rational parse_rational(std::string_view text);

/// Miller-Rabin with at least `rounds` rounds (GMP adds trial division).
bool is_probable_prime(const BigInt& n, int rounds = 64);

}  // namespace cprsa
