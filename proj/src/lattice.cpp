#include "cprsa/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cprsa/real.hpp"

namespace cprsa {

namespace {

double log2_of(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

// ceil(N^exponent) with enough working precision for an exact ceiling.
BigInt ceil_power(const BigInt& n, const Rational& exponent) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bit_length(n)) + 96;
  Real log_n = log2(Real(n, prec));
  Real value = exp2(log_n * Real(exponent, prec));
  return value.ceil();
}

BigInt ceil_sqrt(const BigInt& x) {
  BigInt r = isqrt(x);
  if (r * r < x) r += 1;
  return r;
}

}  // namespace

TrivariatePolynomial build_attack_polynomial(const BigInt& n, const BigInt& e) {
  if (n <= 1 || e <= 1) throw std::invalid_argument("attack polynomial needs N > 1 and e > 1");
  TrivariatePolynomial f;
  f.add_term({0, 0, 0}, 1);
  f.add_term({1, 0, 0}, -2 * e);
  f.add_term({2, 0, 0}, e * e);
  f.add_term({0, 1, 0}, -1);
  f.add_term({0, 0, 1}, -1);
  f.add_term({1, 1, 0}, e);
  f.add_term({1, 0, 1}, e);
  f.add_term({0, 1, 1}, 1 - n);
  return f;
}

bool column_precedes(const Monomial& a, const Monomial& b) {
  const auto key = [](const Monomial& m) { return std::array<unsigned, 3>{m[1] + m[2], m[1], m[0]}; };
  return key(a) > key(b);
}

namespace {

std::vector<Monomial> enumerate_box(unsigned side, unsigned x1_base, unsigned t) {
  std::vector<Monomial> out;
  for (unsigned i2 = 0; i2 <= side; ++i2)
    for (unsigned i3 = 0; i3 <= side; ++i3)
      for (unsigned i1 = 0; i1 <= x1_base - i2 - i3 + t; ++i1) out.push_back({i1, i2, i3});
  std::sort(out.begin(), out.end(), column_precedes);
  return out;
}

}  // namespace

std::vector<Monomial> monomials_S(unsigned s, unsigned t) {
  if (s == 0) throw std::invalid_argument("s must be positive");
  return enumerate_box(s - 1, 2 * (s - 1), t);
}

std::vector<Monomial> monomials_M(unsigned s, unsigned t) {
  if (s == 0) throw std::invalid_argument("s must be positive");
  return enumerate_box(s, 2 * s, t);
}

unsigned t_from_tau(const Rational& tau, unsigned s) {
  Rational scaled = tau * s;
  if (scaled <= 0) return 0;
  // round half up
  BigInt t = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  return static_cast<unsigned>(t.get_ui());
}

bool AttackPlan::in_S(const Monomial& m) const {
  return m[1] + 1 <= s && m[2] + 1 <= s && m[0] + m[1] + m[2] <= 2 * (s - 1) + t;
}

BigInt AttackPlan::column_scale(const Monomial& m) const {
  return pow(X1, m[0]) * pow(X2, m[1]) * pow(X3, m[2]);
}

AttackPlan make_plan_with_bounds(const BigInt& n, const BigInt& e, unsigned s, unsigned t, const BigInt& X1,
                                 const BigInt& X2, const BigInt& X3) {
  if (s == 0) throw std::invalid_argument("s must be positive");
  if (X1 < 1 || X2 < 1 || X3 < 1) throw std::invalid_argument("root bounds must be at least 1");
  AttackPlan plan;
  plan.n = n;
  plan.e = e;
  plan.s = s;
  plan.t = t;
  plan.X1 = X1;
  plan.X2 = X2;
  plan.X3 = X3;
  const TrivariatePolynomial f = build_attack_polynomial(n, e);
  plan.Xinf = max_abs_coefficient(f.scale_vars(X1, X2, X3));
  plan.R = plan.Xinf * pow(X1, 2 * (s - 1) + t) * pow(X2 * X3, s - 1);
  plan.S = monomials_S(s, t);
  plan.M = monomials_M(s, t);
  plan.omega = plan.M.size();
  plan.s0 = plan.S.size();
  plan.s1 = plan.s2 = plan.s3 = 0;
  for (const auto& m : plan.M) {
    if (plan.in_S(m)) continue;
    ++plan.sR;
    plan.s1 += m[0];
    plan.s2 += m[1];
    plan.s3 += m[2];
  }
  const double log_n = log2_of(n);
  plan.delta = log2_of(X1) / log_n;
  plan.gamma = plan.delta + 0.5 - log2_of(X2) / log_n;
  return plan;
}

AttackPlan make_plan(const BigInt& n, const BigInt& e, unsigned s, unsigned t, const Rational& delta,
                     const Rational& gamma) {
  const Rational cofactor_exponent = delta - gamma + make_rational(1, 2);
  if (cofactor_exponent <= 0) throw std::invalid_argument("delta - gamma + 1/2 must be positive");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  AttackPlan plan =
      make_plan_with_bounds(n, e, s, t, ceil_power(n, delta), ceil_power(n, cofactor_exponent),
                            ceil_power(n, cofactor_exponent));
  plan.delta = delta.get_d();
  plan.gamma = gamma.get_d();
  return plan;
}

AttackPlan make_plan_for_sizes(const BigInt& n, const BigInt& e, unsigned s, unsigned t, unsigned delta_bits,
                               unsigned gamma_bits) {
  const BigInt X1 = pow2(delta_bits);
  const long shift = static_cast<long>(delta_bits) - static_cast<long>(gamma_bits) + 1;
  BigInt Y;
  if (shift >= 0) {
    Y = ceil_sqrt(n * pow2(2 * static_cast<unsigned long>(shift)));
  } else {
    const BigInt den = pow2(static_cast<unsigned long>(-shift));
    Y = (ceil_sqrt(n) + den - 1) / den;
  }
  if (Y < 1) Y = 1;
  return make_plan_with_bounds(n, e, s, t, X1, Y, Y);
}

AsymptoticSums sums_asymptotic(unsigned s, const Rational& tau) {
  const Rational cube = Rational(BigInt(s) * s * s);
  return AsymptoticSums{
      (1 + tau) * cube,
      (make_rational(7, 3) + 3 * tau + tau * tau) * cube,
      (make_rational(5, 3) + 3 * tau / 2) * cube,
      (make_rational(5, 3) + 3 * tau / 2) * cube,
  };
}

TrivariatePolynomial shift_polynomial(const AttackPlan& plan, const TrivariatePolynomial& f, const Monomial& m) {
  if (plan.in_S(m)) {
    const unsigned top = 2 * (plan.s - 1) + plan.t;
    BigInt factor = pow(plan.X1, top - m[0]) * pow(plan.X2, plan.s - 1 - m[1]) * pow(plan.X3, plan.s - 1 - m[2]);
    TrivariatePolynomial g = f.multiply_monomial(m);
    g *= factor;
    return g;
  }
  return TrivariatePolynomial::term(m, plan.R);
}

IntegerLattice build_basis(const AttackPlan& plan, const TrivariatePolynomial& f) {
  if (f.coefficient({0, 0, 0}) != 1)
    throw std::invalid_argument("attack polynomial must have constant term 1");
  IntegerLattice lattice;
  lattice.columns = plan.M;
  const std::size_t w = plan.M.size();
  std::vector<BigInt> scales(w);
  for (std::size_t j = 0; j < w; ++j) scales[j] = plan.column_scale(plan.M[j]);

  auto column_of = [&](const Monomial& m) -> std::size_t {
    auto it = std::lower_bound(plan.M.begin(), plan.M.end(), m, column_precedes);
    if (it == plan.M.end() || *it != m) throw std::logic_error("shift polynomial leaves the monomial set M");
    return static_cast<std::size_t>(it - plan.M.begin());
  };

  lattice.rows.assign(w, std::vector<BigInt>(w, 0));
  for (std::size_t r = 0; r < w; ++r) {
    const Monomial& m = plan.M[r];
    lattice.row_monomials.push_back(m);
    lattice.kinds.push_back(plan.in_S(m) ? RowKind::shifted_f : RowKind::modulus);
    const TrivariatePolynomial g = shift_polynomial(plan, f, m);
    for (const auto& [mono, coeff] : g.terms()) {
      const std::size_t c = column_of(mono);
      if (c > r) throw std::logic_error("monomial order violation: basis is not triangular");
      lattice.rows[r][c] = coeff * scales[c];
    }
  }
  return lattice;
}

BigInt triangular_determinant(const IntegerLattice& lattice) {
  BigInt det = 1;
  for (std::size_t i = 0; i < lattice.rows.size(); ++i) det *= lattice.rows[i][i];
  return abs(det);
}

bool is_lower_triangular(const IntegerLattice& lattice) {
  for (std::size_t i = 0; i < lattice.rows.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.rows[i].size(); ++j)
      if (lattice.rows[i][j] != 0) return false;
  return true;
}

ConditionDiagnostics solving_condition(const AttackPlan& plan) {
  ConditionDiagnostics out;
  const BigInt r_over_xinf = divide_exact(plan.R, plan.Xinf);
  const BigInt monomials = pow(plan.X1, plan.s1.get_ui()) * pow(plan.X2, plan.s2.get_ui()) * pow(plan.X3, plan.s3.get_ui());
  const BigInt det = pow(r_over_xinf, plan.s0.get_ui()) * pow(plan.R, plan.sR) * monomials;
  const BigInt r_omega = pow(plan.R, plan.omega);
  out.det_bits = bit_length(det);
  out.r_pow_omega_bits = bit_length(r_omega);
  out.general_holds = det < r_omega;

  const BigInt xinf_side = pow(plan.Xinf, plan.s0.get_ui());
  out.monomial_side_bits = bit_length(monomials);
  out.xinf_side_bits = bit_length(xinf_side);
  out.reduced_holds = monomials < xinf_side;
  out.agree = out.general_holds == out.reduced_holds;

  const unsigned long w = plan.omega;
  if (w >= 2) {
    const BigInt lhs = det * det * pow2(w * (w - 1) / 2) * pow(BigInt(w), w - 1);
    out.two_vector_holds = lhs < pow(plan.R, 2 * (w - 1));
  }
  out.margin_bits = log2_of(r_omega) - log2_of(det);
  return out;
}

std::string monomial_label(const Monomial& m) {
  return "x1^" + std::to_string(m[0]) + "*x2^" + std::to_string(m[1]) + "*x3^" + std::to_string(m[2]);
}

}  // namespace cprsa
