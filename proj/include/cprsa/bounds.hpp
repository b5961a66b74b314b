#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cprsa/bigint.hpp"
#include "cprsa/real.hpp"

namespace cprsa {

/// Exact value rational + coeff * sqrt(radicand) with radicand >= 0.
struct Surd {
  Rational rational{0};
  Rational coeff{0};
  Rational radicand{0};

  static Surd of(const Rational& r) { return Surd{r, 0, 0}; }
  /// Exact rational value when the square root is rational (or absent).
  std::optional<Rational> exact() const;
  Real value(mpfr_prec_t precision = Real::kDefaultPrecision) const;
  double to_double() const { return value().to_double(); }
};

/// Exact square root of a nonnegative rational when numerator and
/// denominator are both perfect squares.
std::optional<Rational> exact_sqrt(const Rational& x);

// Bound formulas in delta as functions of gamma. Each accepts gamma in the
// closed interval [0, 1/2] and throws std::domain_error outside it.
Surd bound_wiener(const Rational& gamma);
Surd bound_hinek_sq(const Rational& gamma);
Surd bound_hinek_lin(const Rational& gamma);
Surd bound_jochemsz_may(const Rational& gamma);
Surd bound_sarkar_maitra_formula(const Rational& gamma);
Surd bound_lu_formula(const Rational& gamma);

enum class TauBranch { positive, zero };
std::string to_string(TauBranch b);

struct CorrectedBound {
  Surd value;
  TauBranch branch;
};

/// gamma + 1 - sqrt(4gamma^2 + 20gamma + 13)/4 for gamma <= 3/10 (optimal
/// tau >= 0), (4gamma + 1)/11 beyond (tau clamped to 0).
CorrectedBound bound_corrected(const Rational& gamma);
/// The two branch formulas on their own, for continuity checks.
Surd corrected_branch_positive(const Rational& gamma);
Surd corrected_branch_zero(const Rational& gamma);

struct OtherBounds {
  Surd wiener;
  Surd hinek_sq;
  Surd hinek_lin;
  std::optional<Surd> sarkar_maitra;  // only on (0.051, 0.2087]
  bool sarkar_maitra_small_gamma_out_of_scope = false;  // gamma <= 0.051: no closed form
  std::optional<Surd> lu;  // only on (1/4, 1/2)
};
OtherBounds bounds_others(const Rational& gamma);

struct MumtazLuoAudit {
  Surd flawed;        // 2 - gamma - sqrt(4gamma^2 - 28gamma + 37)/4
  Surd constraint;    // (3 - 2gamma)/8, from requiring their tau >= 0
  Surd repaired;      // (5 - 4gamma)/11, their condition maximised at tau = 0
  bool flawed_exceeds_constraint = false;
  bool repaired_exceeds_constraint = false;
};
MumtazLuoAudit audit_mumtaz_luo(const Rational& gamma);

/// Values of xi forced by matching the tau^1 and tau^0 coefficients of the
/// inverse-computed condition against the published one.
struct XiSystem {
  Rational from_linear_coeff;
  Rational from_constant_coeff;
  Rational gap() const { return from_linear_coeff - from_constant_coeff; }
};
XiSystem mumtaz_luo_xi_system(const Rational& gamma, const Rational& delta);

/// The published Mumtaz-Luo condition 3d t^2 + (12d + 3g - 9/2) t + 11d + 4g - 5.
Rational mumtaz_luo_condition(const Rational& gamma, const Rational& delta, const Rational& tau);

struct TauChoice {
  Rational tau;
  TauBranch branch;
};
/// max(0, (2gamma - 8delta + 1)/(4delta)); throws for delta <= 0.
TauChoice optimal_tau(const Rational& gamma, const Rational& delta);

/// 6d t^2 + (24d - 6g - 3) t + 22d - 8g - 2; negative means the lattice
/// condition holds asymptotically.
Rational solving_quadratic(const Rational& gamma, const Rational& delta, const Rational& tau);

struct BoundCurve {
  Rational gamma;
  std::optional<Surd> wiener, hinek_sq, hinek_lin, jochemsz_may, sarkar_maitra, lu;
  std::optional<Surd> mumtaz_luo_flawed, mumtaz_luo_constrained, corrected;
};
std::vector<BoundCurve> region_sweep(const std::vector<Rational>& gamma_grid);
/// i/(2n) for i = 1..n.
std::vector<Rational> uniform_gamma_grid(unsigned points);
std::string region_csv(const std::vector<BoundCurve>& rows);

}  // namespace cprsa
