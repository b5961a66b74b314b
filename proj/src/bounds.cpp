#include "cprsa/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace cprsa {

namespace {

const Rational kZero{0};
const Rational kHalf = make_rational(1, 2);

void require_gamma(const Rational& gamma) {
  if (gamma < kZero || gamma > kHalf) throw std::domain_error("gamma must lie in [0, 1/2]");
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational r(isqrt(num), isqrt(den));
  r.canonicalize();
  return r;
}

std::optional<Rational> Surd::exact() const {
  if (coeff == 0) return rational;
  auto root = exact_sqrt(radicand);
  if (!root) return std::nullopt;
  return Rational(rational + coeff * *root);
}

Real Surd::value(mpfr_prec_t precision) const {
  if (auto e = exact()) return Real(*e, precision);
  return Real(rational, precision) + Real(coeff, precision) * sqrt(Real(radicand, precision));
}

std::string to_string(TauBranch b) { return b == TauBranch::positive ? "tau-positive" : "tau-zero"; }

Surd bound_wiener(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of(q(1, 4) - gamma / 2);
}

Surd bound_hinek_sq(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of(gamma * gamma);
}

Surd bound_hinek_lin(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of(2 * gamma / 5);
}

Surd bound_jochemsz_may(const Rational& gamma) {
  require_gamma(gamma);
  return Surd{gamma + 1, q(-1, 4), 4 * gamma * gamma + 20 * gamma + 13};
}

Surd bound_sarkar_maitra_formula(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of(q(1, 4) - gamma / 2 + gamma * gamma / 2);
}

Surd bound_lu_formula(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of(4 * gamma * gamma * gamma);
}

Surd corrected_branch_positive(const Rational& gamma) {
  require_gamma(gamma);
  return Surd{gamma + 1, q(-1, 4), 4 * gamma * gamma + 20 * gamma + 13};
}

Surd corrected_branch_zero(const Rational& gamma) {
  require_gamma(gamma);
  return Surd::of((4 * gamma + 1) / 11);
}

CorrectedBound bound_corrected(const Rational& gamma) {
  require_gamma(gamma);
  if (gamma <= q(3, 10)) return {corrected_branch_positive(gamma), TauBranch::positive};
  return {corrected_branch_zero(gamma), TauBranch::zero};
}

OtherBounds bounds_others(const Rational& gamma) {
  require_gamma(gamma);
  OtherBounds out{bound_wiener(gamma), bound_hinek_sq(gamma), bound_hinek_lin(gamma), {}, false, {}};
  if (gamma > q(51, 1000) && gamma <= q(2087, 10000)) out.sarkar_maitra = bound_sarkar_maitra_formula(gamma);
  out.sarkar_maitra_small_gamma_out_of_scope = gamma <= q(51, 1000);
  if (gamma > q(1, 4) && gamma < kHalf) out.lu = bound_lu_formula(gamma);
  return out;
}

MumtazLuoAudit audit_mumtaz_luo(const Rational& gamma) {
  require_gamma(gamma);
  MumtazLuoAudit a;
  a.flawed = Surd{2 - gamma, q(-1, 4), 4 * gamma * gamma - 28 * gamma + 37};
  a.constraint = Surd::of((3 - 2 * gamma) / 8);
  a.repaired = Surd::of((5 - 4 * gamma) / 11);
  a.flawed_exceeds_constraint = a.flawed.value() > a.constraint.value();
  a.repaired_exceeds_constraint = *a.repaired.exact() > *a.constraint.exact();
  return a;
}

XiSystem mumtaz_luo_xi_system(const Rational& gamma, const Rational& delta) {
  // Inverse computation: (7 + 9t + 3t^2) d + (5 + 9t/2)(2d - 2g + 1) < (3 + 3t) xi
  // gives 3d t^2 + (18d - 9g - 3xi + 9/2) t + 17d - 10g - 3xi + 5 < 0.
  // Match against 3d t^2 + (12d + 3g - 9/2) t + 11d + 4g - 5 < 0.
  const Rational lhs_linear = 18 * delta - 9 * gamma + q(9, 2);
  const Rational rhs_linear = 12 * delta + 3 * gamma - q(9, 2);
  const Rational lhs_constant = 17 * delta - 10 * gamma + 5;
  const Rational rhs_constant = 11 * delta + 4 * gamma - 5;
  return XiSystem{(lhs_linear - rhs_linear) / 3, (lhs_constant - rhs_constant) / 3};
}

Rational mumtaz_luo_condition(const Rational& gamma, const Rational& delta, const Rational& tau) {
  return 3 * delta * tau * tau + (12 * delta + 3 * gamma - q(9, 2)) * tau + 11 * delta + 4 * gamma - 5;
}

TauChoice optimal_tau(const Rational& gamma, const Rational& delta) {
  if (delta <= 0) throw std::domain_error("delta must be positive");
  Rational numerator = 2 * gamma - 8 * delta + 1;
  if (numerator <= 0) return {Rational(0), TauBranch::zero};
  return {numerator / (4 * delta), TauBranch::positive};
}

Rational solving_quadratic(const Rational& gamma, const Rational& delta, const Rational& tau) {
  return 6 * delta * tau * tau + (24 * delta - 6 * gamma - 3) * tau + 22 * delta - 8 * gamma - 2;
}

std::vector<BoundCurve> region_sweep(const std::vector<Rational>& grid) {
  std::vector<BoundCurve> rows;
  rows.reserve(grid.size());
  for (const auto& gamma : grid) {
    BoundCurve row;
    row.gamma = gamma;
    const OtherBounds others = bounds_others(gamma);
    row.wiener = others.wiener;
    row.hinek_sq = others.hinek_sq;
    row.hinek_lin = others.hinek_lin;
    row.sarkar_maitra = others.sarkar_maitra;
    row.lu = others.lu;
    row.jochemsz_may = bound_jochemsz_may(gamma);
    const MumtazLuoAudit audit = audit_mumtaz_luo(gamma);
    row.mumtaz_luo_flawed = audit.flawed;
    row.mumtaz_luo_constrained = audit.constraint;
    row.corrected = bound_corrected(gamma).value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> uniform_gamma_grid(unsigned points) {
  std::vector<Rational> grid;
  grid.reserve(points);
  for (unsigned i = 1; i <= points; ++i) grid.push_back(make_rational(i, 2L * points));
  return grid;
}

std::string region_csv(const std::vector<BoundCurve>& rows) {
  std::ostringstream out;
  out << "gamma,wiener,hinek_sq,hinek_lin,jochemsz_may,sarkar_maitra,lu,ml_flawed,ml_constrained,corrected\n";
  auto cell = [&](const std::optional<Surd>& v) {
    out << ',';
    if (v) out << v->value().to_string(15);
  };
  for (const auto& row : rows) {
    out << Real(row.gamma).to_string(15);
    cell(row.wiener);
    cell(row.hinek_sq);
    cell(row.hinek_lin);
    cell(row.jochemsz_may);
    cell(row.sarkar_maitra);
    cell(row.lu);
    cell(row.mumtaz_luo_flawed);
    cell(row.mumtaz_luo_constrained);
    cell(row.corrected);
    out << '\n';
  }
  return out.str();
}

}  // namespace cprsa
