#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cprsa/bigint.hpp"
#include "cprsa/keygen.hpp"
#include "cprsa/lattice.hpp"
#include "cprsa/polynomial.hpp"

namespace cprsa {

/// A reduced polynomial that passed ||g(x X)||^2 * omega < R^2.
struct FilteredPolynomial {
  TrivariatePolynomial poly;
  /// Squared norm of g(x1 X1, x2 X2, x3 X3).
  BigInt scaled_norm_sq;
  /// Position in the list handed to the filter.
  std::size_t source_index = 0;
  /// The zero polynomial passes trivially but carries no information.
  bool degenerate = false;
};

bool howgrave_graham_passes(const BigInt& scaled_norm_sq, const AttackPlan& plan);

/// Keeps the polynomials whose scaled norm is below R / sqrt(omega), in input
/// order. The comparison is exact: omega * norm^2 < R^2.
std::vector<FilteredPolynomial> howgrave_filter(const std::vector<TrivariatePolynomial>& polys,
                                                const AttackPlan& plan);

struct RootCandidate {
  BigInt x1, x2, x3;
  bool verified = false;

  Point point() const { return {x1, x2, x3}; }
  bool positive() const { return x1 > 0 && x2 > 0 && x3 > 0; }
};

enum class ExtractStatus {
  found,
  dependent,  // a resultant vanished identically
  no_root,    // no integer root within the bounds
};
std::string to_string(ExtractStatus s);

struct ExtractOutcome {
  ExtractStatus status = ExtractStatus::no_root;
  /// Stage at which a dependent pair was detected: "g1", "g2" or "h".
  std::string stage;
  /// Every verified common root within the bounds, positive triples first.
  std::vector<RootCandidate> roots;
  /// Degree of h in x1 (-1 when not reached).
  int h_degree = -1;
};

/// g1 = Res_x3(f, f1), g2 = Res_x3(f, f2), h = Res_x2(g1, g2); integer roots
/// of h within X1 are back-substituted into g1 (or g2) for x2 and into f for
/// x3. A triple is kept only if f, f1 and f2 all vanish there and it lies
/// within the bounds.
ExtractOutcome extract_root(const TrivariatePolynomial& f, const TrivariatePolynomial& f1,
                            const TrivariatePolynomial& f2, const AttackPlan& plan);

struct RecoveredKey {
  BigInt k, a, b, g, p, q;
};

/// Raised when a root does not lead to a factorization of N.
class SpuriousRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k = gcd(x2, x3), a = x2/k, b = x3/k, g = (e x1 - 1)/(2abk), p = 2ga + 1,
/// q = 2gb + 1. Throws SpuriousRoot on a non-exact division or p q != N.
RecoveredKey recover_factorization(const BigInt& n, const BigInt& e, const RootCandidate& root);

/// Full key transcript for a recovered factorization (h and the bit sizes
/// recomputed, d = root.x1).
CommonPrimeInstance recovered_instance(const BigInt& n, const BigInt& e, const RootCandidate& root,
                                       const RecoveredKey& key);

}  // namespace cprsa
