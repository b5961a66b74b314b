#pragma once

#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cprsa/bigint.hpp"
#include "cprsa/lattice.hpp"
#include "cprsa/polynomial.hpp"

namespace cprsa {

using IntMatrix = std::vector<std::vector<BigInt>>;

enum class LllMethod {
  exact,     // integral Gram-Schmidt (d_i, lambda_ij), reference path
  floating,  // exact basis and Gram matrix, MPFR Gram-Schmidt
};

struct LllOptions {
  /// Lovasz factor; the 2^((w-1)/4) style output bounds assume 3/4.
  Rational lovasz{3, 4};
  LllMethod method = LllMethod::floating;
  /// MPFR mantissa bits for the floating path; 0 picks max(113, 3*dim + 64).
  mpfr_prec_t precision = 0;
  bool track_transform = true;
  /// Stable-sort the input rows by ascending norm first; on triangular
  /// Coppersmith bases this roughly halves the number of swaps.
  bool presort = true;
  /// Finish the floating path with an exact integral pass, which both
  /// certifies the result and repairs any step the floating estimates got
  /// wrong. Costs one integral Gram-Schmidt of the output.
  bool exact_polish = true;
};

struct ReducedBasis {
  IntMatrix vectors;
  /// U with U * input = vectors (empty when not tracked).
  IntMatrix transform;
  std::size_t swaps = 0;
  /// Swaps made by the exact polishing pass (0 when it found nothing to do).
  std::size_t polish_swaps = 0;
};

class RankDeficient : public std::runtime_error {
 public:
  explicit RankDeficient(std::size_t row);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// LLL reduction with size-reduction bound 1/2 and the given Lovasz factor.
/// Both methods apply the same step schedule (full size reduction of b_k,
/// then the Lovasz test), so away from exact ties they produce identical
/// bases. Throws RankDeficient when the rows are linearly dependent.
ReducedBasis lll_reduce(const IntMatrix& basis, const LllOptions& options = {});
ReducedBasis lll_reduce(const IntegerLattice& lattice, const LllOptions& options = {});

struct ReductionCheck {
  bool size_reduced = true;
  bool lovasz = true;
  bool ok() const { return size_reduced && lovasz; }
};
/// Exact rational check of |mu_ij| <= 1/2 and B_k >= (lovasz - mu^2) B_{k-1}.
ReductionCheck check_lll_reduced(const IntMatrix& basis, const Rational& lovasz = Rational(3, 4));

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);
/// det(B B^T).
BigInt gram_determinant(const IntMatrix& basis);
/// U * input == output and |det U| == 1.
bool verify_certificate(const IntMatrix& input, const ReducedBasis& reduced);

/// Checks max_{j<=i} |v_j|^(2(w+1-i)) <= 2^(w(w-1)/2) det^2 for every i,
/// i.e. |v_1|..|v_i| <= 2^(w(w-1)/(4(w+1-i))) det^(1/(w+1-i)). Returns the
/// 1-based index of the first failing i, or 0 when all hold.
std::size_t lll_norm_bound_violation(const IntMatrix& vectors, const BigInt& lattice_det);

BigInt norm2_sq(const std::vector<BigInt>& v);

/// Undoes the column scaling of each of the first `count` vectors and
/// returns them as polynomials over the monomials of M. Throws
/// std::logic_error if an entry is not divisible by its column scale.
std::vector<TrivariatePolynomial> extract_polynomials(const ReducedBasis& reduced, const AttackPlan& plan,
                                                      std::size_t count);
TrivariatePolynomial row_to_polynomial(const std::vector<BigInt>& row, const AttackPlan& plan);

}  // namespace cprsa
