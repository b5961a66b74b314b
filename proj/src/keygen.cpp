#include "cprsa/keygen.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace cprsa {

BigInt CommonPrimeInstance::k_gcd_2g() const { return gcd(k, 2 * g); }

namespace {

BigInt uniform_in(gmp_randclass& rng, const BigInt& lo, const BigInt& hi) {
  // Uniform over [lo, hi].
  BigInt width = hi - lo + 1;
  return lo + rng.get_z_range(width);
}

BigInt random_prime_of_bits(gmp_randclass& rng, unsigned bits, const KeygenOptions& options) {
  if (bits < 2) throw InfeasibleParameters("prime bit-length must be at least 2");
  const BigInt lo = pow2(bits - 1);
  const BigInt hi = pow2(bits) - 1;
  for (std::uint64_t attempt = 0; attempt < options.max_candidates; ++attempt) {
    BigInt candidate = uniform_in(rng, lo, hi);
    if (bits > 2) mpz_setbit(candidate.get_mpz_t(), 0);
    if (is_probable_prime(candidate, options.primality_rounds)) return candidate;
  }
  throw InfeasibleParameters("no prime of the requested size found");
}

// Smallest x with x*x >= 2^(2*bits - 1), i.e. the lower end of the upper
// half of the bit range; keeping both primes there makes n exactly bits long.
BigInt balanced_prime_floor(unsigned prime_bits) {
  BigInt target = pow2(2 * prime_bits - 1);
  BigInt r = isqrt(target);
  if (r * r < target) r += 1;
  return r;
}

}  // namespace

CommonPrimeInstance instance_from_components(const BigInt& g, const BigInt& a, const BigInt& b,
                                             const BigInt& d) {
  CommonPrimeInstance inst;
  inst.g = g;
  inst.a = a;
  inst.b = b;
  inst.d = d;
  inst.p = 2 * g * a + 1;
  inst.q = 2 * g * b + 1;
  inst.n = inst.p * inst.q;
  inst.h = 2 * g * a * b + a + b;
  const BigInt lambda = inst.lambda();
  BigInt e;
  if (mpz_invert(e.get_mpz_t(), d.get_mpz_t(), lambda.get_mpz_t()) == 0)
    throw std::invalid_argument("d is not invertible modulo 2gab");
  inst.e = e;
  inst.k = divide_exact(inst.e * d - 1, lambda);
  inst.bits = static_cast<unsigned>(bit_length(inst.n));
  inst.gamma_bits = static_cast<unsigned>(bit_length(g));
  inst.delta_bits = static_cast<unsigned>(bit_length(d));
  return inst;
}

CommonPrimeInstance generate_instance(unsigned bits, unsigned gamma_bits, unsigned delta_bits,
                                      std::uint64_t seed, const KeygenOptions& options) {
  if (bits < 16) throw std::invalid_argument("modulus must have at least 16 bits");
  if (gamma_bits == 0 || 2 * gamma_bits >= bits)
    throw InfeasibleParameters("gamma_bits must satisfy 0 < gamma_bits < bits/2");
  if (delta_bits < 2 || delta_bits >= bits)
    throw InfeasibleParameters("delta_bits must satisfy 1 < delta_bits < bits");

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));

  const unsigned p_bits = bits / 2;
  const unsigned q_bits = bits - p_bits;

  const BigInt g = random_prime_of_bits(rng, gamma_bits, options);
  const BigInt two_g = 2 * g;

  // a ranges over values that keep p = 2ga+1 in [balanced floor, 2^p_bits).
  auto cofactor_range = [&](unsigned prime_bits) {
    BigInt lo = (balanced_prime_floor(prime_bits) - 1 + two_g - 1) / two_g;
    BigInt hi = (pow2(prime_bits) - 2) / two_g;
    return std::pair{std::max(lo, BigInt(1)), hi};
  };
  const auto [a_lo, a_hi] = cofactor_range(p_bits);
  const auto [b_lo, b_hi] = cofactor_range(q_bits);
  if (a_lo > a_hi || b_lo > b_hi)
    throw InfeasibleParameters("gamma_bits too close to bits/2: no room for the cofactors a, b");

  std::uint64_t candidates = 0;
  BigInt a, b;
  bool found = false;
  while (!found) {
    a = uniform_in(rng, a_lo, a_hi);
    ++candidates;
    if (candidates > options.max_candidates)
      throw InfeasibleParameters("retry cap reached while searching for (a, b)");
    if (!is_probable_prime(two_g * a + 1, options.primality_rounds)) continue;
    // With p fixed, search b; fall back to a fresh a after a bounded number of b draws.
    for (int inner = 0; inner < 20000 && !found; ++inner) {
      if (++candidates > options.max_candidates)
        throw InfeasibleParameters("retry cap reached while searching for (a, b)");
      b = uniform_in(rng, b_lo, b_hi);
      if (gcd(a, b) != 1) continue;
      if (!is_probable_prime(two_g * b + 1, options.primality_rounds)) continue;
      if (!is_probable_prime(two_g * a * b + a + b, options.primality_rounds)) continue;
      found = true;
    }
  }

  const BigInt lambda = two_g * a * b;
  const BigInt d_lo = pow2(delta_bits - 1);
  const BigInt d_hi = pow2(delta_bits) - 1;
  for (std::uint64_t attempt = 0; attempt < options.max_candidates; ++attempt) {
    BigInt d = uniform_in(rng, d_lo, d_hi);
    mpz_setbit(d.get_mpz_t(), 0);
    if (d > d_hi || gcd(d, lambda) != 1) continue;
    CommonPrimeInstance inst = instance_from_components(g, a, b, d);
    if (inst.e <= 1) continue;
    inst.bits = bits;
    inst.gamma_bits = gamma_bits;
    inst.delta_bits = delta_bits;
    inst.seed = seed;
    return inst;
  }
  throw InfeasibleParameters("no private exponent coprime to 2gab found");
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_instance(const CommonPrimeInstance& inst, int rounds) {
  VerificationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  add("g_prime", is_probable_prime(inst.g, rounds));
  add("p_prime", is_probable_prime(inst.p, rounds));
  add("q_prime", is_probable_prime(inst.q, rounds));
  add("h_prime", is_probable_prime(inst.h, rounds));
  add("p_structure", inst.p == 2 * inst.g * inst.a + 1, "p = 2ga + 1");
  add("q_structure", inst.q == 2 * inst.g * inst.b + 1, "q = 2gb + 1");
  add("h_structure", inst.h == 2 * inst.g * inst.a * inst.b + inst.a + inst.b, "h = 2gab + a + b");
  add("a_b_coprime", inst.a > 0 && inst.b > 0 && gcd(inst.a, inst.b) == 1);
  add("modulus", inst.n == inst.p * inst.q, "n = pq");
  add("semiprime_half", inst.n > 1 && (inst.n - 1) == 2 * inst.g * inst.h, "(n-1)/2 = gh");

  const BigInt lambda = inst.lambda();
  const bool lambda_ok = lambda > 0;
  add("key_equation", lambda_ok && (inst.e * inst.d - 1) % lambda == 0, "ed = 1 mod 2gab");
  add("k_value", lambda_ok && inst.e * inst.d - 1 == inst.k * lambda, "ed - 1 = k * 2gab");
  add("e_reduced", lambda_ok && inst.e > 0 && inst.e < lambda, "0 < e < 2gab");

  BigInt pm1 = inst.p - 1, qm1 = inst.q - 1;
  BigInt l;
  mpz_lcm(l.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
  add("lcm_identity", l == lambda, "lcm(p-1, q-1) = 2gab");

  const auto pb = bit_length(inst.p), qb = bit_length(inst.q);
  add("balanced", (pb > qb ? pb - qb : qb - pb) <= 1, "bit-lengths of p and q differ by at most 1");
  add("k_gcd_2g", true, "gcd(k, 2g) = " + inst.k_gcd_2g().get_str());
  return report;
}

}  // namespace cprsa
