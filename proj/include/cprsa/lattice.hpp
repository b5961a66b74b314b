#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cprsa/bigint.hpp"
#include "cprsa/polynomial.hpp"

namespace cprsa {

/// f(x1, x2, x3) = 1 - 2e x1 + e^2 x1^2 - x2 - x3 + e x1 x2 + e x1 x3 + (1 - N) x2 x3,
/// vanishing at (d, ak, bk) for a common prime key.
TrivariatePolynomial build_attack_polynomial(const BigInt& n, const BigInt& e);

/// Column order of the basis: monomials are sorted by descending
/// (i2 + i3, i2, i1). Every shift x^m * f only touches columns at or before
/// m under this order, which makes the basis lower triangular.
bool column_precedes(const Monomial& a, const Monomial& b);

/// S: i2, i3 in [0, s-1], i1 in [0, 2(s-1) - i2 - i3 + t].
std::vector<Monomial> monomials_S(unsigned s, unsigned t);
/// M: i2, i3 in [0, s], i1 in [0, 2s - i2 - i3 + t].
std::vector<Monomial> monomials_M(unsigned s, unsigned t);

/// t = round(tau * s), clamped at 0.
unsigned t_from_tau(const Rational& tau, unsigned s);

struct AttackPlan {
  BigInt n, e;
  unsigned s = 1;
  unsigned t = 0;
  /// Size hints the bounds were derived from (approximate when the plan was
  /// built from bit sizes).
  double delta = 0;
  double gamma = 0;

  BigInt X1, X2, X3;
  BigInt Xinf;  // max |a_i| X1^i1 X2^i2 X3^i3 over the eight terms of f
  BigInt R;     // Xinf * X1^(2(s-1)+t) * (X2 X3)^(s-1)

  std::vector<Monomial> S;  // column order
  std::vector<Monomial> M;  // column order; also the row order of the basis
  std::size_t omega = 0;

  // s0 = |S|, sR = |M \ S|, sj = sum of i_j over M \ S.
  BigInt s0, s1, s2, s3;
  std::size_t sR = 0;

  Rational tau() const { return Rational(t, s); }
  bool in_S(const Monomial& m) const;
  /// X1^i1 X2^i2 X3^i3.
  BigInt column_scale(const Monomial& m) const;
};

/// Bounds X1 = ceil(N^delta), X2 = X3 = ceil(N^(delta - gamma + 1/2)).
/// Throws std::invalid_argument when delta - gamma + 1/2 <= 0.
AttackPlan make_plan(const BigInt& n, const BigInt& e, unsigned s, unsigned t, const Rational& delta,
                     const Rational& gamma);

/// Bounds from bit sizes: X1 = 2^delta_bits and
/// X2 = X3 = ceil(2^(delta_bits - gamma_bits + 1) * sqrt(N)), which cover
/// d < 2^delta_bits and ak, bk whenever g >= 2^(gamma_bits - 1) and p, q
/// are balanced.
AttackPlan make_plan_for_sizes(const BigInt& n, const BigInt& e, unsigned s, unsigned t,
                               unsigned delta_bits, unsigned gamma_bits);

AttackPlan make_plan_with_bounds(const BigInt& n, const BigInt& e, unsigned s, unsigned t, const BigInt& X1,
                                 const BigInt& X2, const BigInt& X3);

struct AsymptoticSums {
  Rational s0, s1, s2, s3;
};
/// Leading-order s^3 terms: (1+tau), (7/3 + 3tau + tau^2), (5/3 + 3tau/2) twice.
AsymptoticSums sums_asymptotic(unsigned s, const Rational& tau);

enum class RowKind { shifted_f, modulus };

struct IntegerLattice {
  std::vector<std::vector<BigInt>> rows;
  std::vector<Monomial> columns;
  /// Monomial that defines each row (its diagonal position).
  std::vector<Monomial> row_monomials;
  std::vector<RowKind> kinds;

  std::size_t dimension() const { return rows.size(); }
};

/// Shift polynomial before variable scaling: x^m f X1^(2(s-1)+t-i1) X2^(s-1-i2)
/// X3^(s-1-i3) for m in S, R x^m for m in M \ S.
TrivariatePolynomial shift_polynomial(const AttackPlan& plan, const TrivariatePolynomial& f, const Monomial& m);

/// One row per monomial of M, each the coefficient vector of the scaled shift
/// polynomial. Throws std::invalid_argument unless f has constant term 1.
IntegerLattice build_basis(const AttackPlan& plan, const TrivariatePolynomial& f);

/// Product of the diagonal; equals |det| since the basis is triangular.
BigInt triangular_determinant(const IntegerLattice& lattice);
/// True when every entry right of the diagonal is zero.
bool is_lower_triangular(const IntegerLattice& lattice);

struct ConditionDiagnostics {
  // det(L) < R^omega
  std::size_t det_bits = 0;
  std::size_t r_pow_omega_bits = 0;
  bool general_holds = false;
  // X1^s1 X2^s2 X3^s3 < Xinf^s0
  std::size_t monomial_side_bits = 0;
  std::size_t xinf_side_bits = 0;
  bool reduced_holds = false;
  bool agree = false;
  // Non-asymptotic two-vector form: det^2 * 2^(w(w-1)/2) * w^(w-1) < R^(2(w-1)).
  bool two_vector_holds = false;
  /// log2(R^omega) - log2(det), positive when the condition holds.
  double margin_bits = 0;
};
ConditionDiagnostics solving_condition(const AttackPlan& plan);

std::string monomial_label(const Monomial& m);

}  // namespace cprsa
