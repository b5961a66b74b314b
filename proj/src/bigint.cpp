#include "cprsa/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace cprsa {

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt pow2(unsigned long exponent) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), exponent);
  return r;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt abs(const BigInt& x) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt divide_exact(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("inexact integer division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text), 10);
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = from_decimal(text.substr(0, slash));
    BigInt den = from_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    BigInt num = from_decimal(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    Rational r(num, pow(BigInt(10), frac.size()));
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(from_decimal(text));
}

bool is_probable_prime(const BigInt& n, int rounds) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

}  // namespace cprsa
