#include "cprsa/attack.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace cprsa {

std::string to_string(AttackStatus s) {
  switch (s) {
    case AttackStatus::success:
      return "success";
    case AttackStatus::no_filtered_polynomials:
      return "no-filtered-polynomials";
    case AttackStatus::dependent:
      return "dependent";
    case AttackStatus::no_root:
      return "no-root-in-bounds";
    case AttackStatus::spurious_root:
      return "spurious-root";
  }
  return "unknown";
}

int exit_code(AttackStatus s) {
  switch (s) {
    case AttackStatus::success:
      return 0;
    case AttackStatus::no_filtered_polynomials:
      return 3;
    case AttackStatus::dependent:
      return 4;
    case AttackStatus::no_root:
      return 5;
    case AttackStatus::spurious_root:
      return 6;
  }
  return 1;
}

std::size_t AttackReport::dependent_pairs() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairAttempt& p) {
    return p.status == ExtractStatus::dependent;
  }));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool within_bounds(const Point& pt, const AttackPlan& plan) {
  return abs(pt[0]) <= plan.X1 && abs(pt[1]) <= plan.X2 && abs(pt[2]) <= plan.X3;
}

// (0,1), (0,2), (1,2), (0,3), ... : pairs ordered by their larger index.
std::vector<std::pair<std::size_t, std::size_t>> pair_order(std::size_t n, std::size_t cap) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 1; j < n && out.size() < cap; ++j)
    for (std::size_t i = 0; i < j && out.size() < cap; ++i) out.emplace_back(i, j);
  return out;
}

}  // namespace

AttackReport run_attack(const AttackPlan& plan, const AttackOptions& options) {
  const auto start = Clock::now();
  AttackReport report;
  report.plan = plan;
  report.condition = solving_condition(plan);

  auto t = Clock::now();
  const TrivariatePolynomial f = build_attack_polynomial(plan.n, plan.e);
  IntegerLattice lattice = build_basis(plan, f);
  report.lattice_det = triangular_determinant(lattice);
  report.times.basis = seconds_since(t);

  if (options.planted_root) {
    const Point& root = *options.planted_root;
    PlantedAudit audit;
    audit.root_within_bounds = within_bounds(root, plan);
    audit.f_vanishes = f.eval(root) == 0;
    audit.rows_vanish_mod_r = true;
    for (const auto& row : lattice.rows) {
      BigInt v = row_to_polynomial(row, plan).eval(root);
      if (!mpz_divisible_p(v.get_mpz_t(), plan.R.get_mpz_t())) {
        audit.rows_vanish_mod_r = false;
        break;
      }
    }
    report.audit = audit;
  }

  t = Clock::now();
  ReducedBasis reduced = lll_reduce(lattice, options.lll);
  report.times.reduction = seconds_since(t);
  report.lll_swaps = reduced.swaps;
  report.polish_swaps = reduced.polish_swaps;

  t = Clock::now();
  // The row of a reduced vector already is the coefficient vector of
  // g(x1 X1, x2 X2, x3 X3), so the norm test runs before unscaling.
  std::vector<TrivariatePolynomial> candidates;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < reduced.vectors.size(); ++i) {
    if (!howgrave_graham_passes(norm2_sq(reduced.vectors[i]), plan)) continue;
    candidates.push_back(row_to_polynomial(reduced.vectors[i], plan));
    rows.push_back(i);
  }
  report.filtered = howgrave_filter(candidates, plan);
  for (auto& fp : report.filtered) fp.source_index = rows[fp.source_index];
  std::stable_sort(report.filtered.begin(), report.filtered.end(),
                   [](const FilteredPolynomial& a, const FilteredPolynomial& b) {
                     return a.scaled_norm_sq < b.scaled_norm_sq;
                   });
  report.times.filter = seconds_since(t);

  if (report.audit) {
    auto& audit = *report.audit;
    for (const auto& fp : report.filtered) {
      if (fp.poly.eval(*options.planted_root) != 0) ++audit.filtered_nonvanishing;
    }
    audit.filtered_vanish = audit.filtered_nonvanishing == 0;
  }
  if (options.keep_lattice) {
    report.lattice = std::move(lattice);
    report.reduced = std::move(reduced);
  }

  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < report.filtered.size(); ++i) {
    if (!report.filtered[i].degenerate) usable.push_back(i);
  }
  if (usable.size() < 2) {
    report.status = AttackStatus::no_filtered_polynomials;
    report.message = std::to_string(report.filtered.size()) + " polynomial(s) passed the norm test";
    report.times.total = seconds_since(start);
    return report;
  }

  t = Clock::now();
  bool any_spurious = false;
  for (const auto& [i, j] : pair_order(usable.size(), options.max_pairs)) {
    PairAttempt attempt;
    attempt.first = usable[i];
    attempt.second = usable[j];
    const ExtractOutcome outcome =
        extract_root(f, report.filtered[attempt.first].poly, report.filtered[attempt.second].poly, plan);
    attempt.status = outcome.status;
    attempt.stage = outcome.stage;
    attempt.roots = outcome.roots.size();
    bool done = false;
    for (const auto& root : outcome.roots) {
      // (0, 1, 0) and (0, 0, 1) are roots of f for every key.
      if (!root.positive()) continue;
      try {
        report.key = recover_factorization(plan.n, plan.e, root);
        report.root = root;
        done = true;
        break;
      } catch (const SpuriousRoot&) {
        ++attempt.spurious;
      }
    }
    if (attempt.spurious > 0 && !done) any_spurious = true;
    report.pairs.push_back(attempt);
    if (done) break;
  }
  report.times.extraction = seconds_since(t);

  if (report.key) {
    report.status = AttackStatus::success;
    report.message = "factored N";
  } else if (any_spurious) {
    report.status = AttackStatus::spurious_root;
    report.message = "positive roots found, none factors N";
  } else if (report.dependent_pairs() == report.pairs.size()) {
    report.status = AttackStatus::dependent;
    report.message = "every pair tried was algebraically dependent";
  } else {
    report.status = AttackStatus::no_root;
    report.message = "no integer root within the bounds";
  }
  report.times.total = seconds_since(start);
  return report;
}

AttackReport attack_instance(const CommonPrimeInstance& inst, unsigned s, unsigned t, AttackOptions options) {
  const AttackPlan plan = make_plan_for_sizes(inst.n, inst.e, s, t, inst.delta_bits, inst.gamma_bits);
  options.planted_root = Point{inst.d, inst.a * inst.k, inst.b * inst.k};
  return run_attack(plan, options);
}

}  // namespace cprsa
