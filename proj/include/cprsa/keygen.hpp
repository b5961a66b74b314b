#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cprsa/bigint.hpp"

namespace cprsa {

/// Full transcript of one common prime RSA key: p = 2ga+1, q = 2gb+1 with
/// g, p, q, h = 2gab+a+b prime, gcd(a,b) = 1 and e*d = 1 + k*2gab.
struct CommonPrimeInstance {
  BigInt n, p, q, g, a, b, h, e, d, k;
  unsigned bits = 0;
  unsigned gamma_bits = 0;
  unsigned delta_bits = 0;
  std::uint64_t seed = 0;

  /// lcm(p-1, q-1) = 2gab.
  BigInt lambda() const { return 2 * g * a * b; }
  /// gcd(k, 2g); recorded, not enforced.
  BigInt k_gcd_2g() const;
};

/// Thrown when the prime search exceeds its retry budget.
class InfeasibleParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeygenOptions {
  std::uint64_t max_candidates = 1'000'000;
  int primality_rounds = 64;
};

/// Samples a prime g of `gamma_bits` bits, then a and b until p, q and h
/// are prime with gcd(a, b) = 1, then an odd d of exactly `delta_bits` bits
/// coprime to 2gab. Deterministic in `seed`.
CommonPrimeInstance generate_instance(unsigned bits, unsigned gamma_bits, unsigned delta_bits,
                                      std::uint64_t seed, const KeygenOptions& options = {});

/// Builds the derived fields (p, q, n, h, e, k) from structure integers and
/// a private exponent. Does not check primality; use verify_instance.
CommonPrimeInstance instance_from_components(const BigInt& g, const BigInt& a, const BigInt& b,
                                             const BigInt& d);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Re-checks every structural invariant of `inst` independently.
VerificationReport verify_instance(const CommonPrimeInstance& inst, int primality_rounds = 64);

}  // namespace cprsa
