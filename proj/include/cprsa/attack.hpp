#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cprsa/extract.hpp"
#include "cprsa/keygen.hpp"
#include "cprsa/lattice.hpp"
#include "cprsa/lll.hpp"

namespace cprsa {

enum class AttackStatus {
  success,
  no_filtered_polynomials,  // fewer than two reduced vectors pass the norm test
  dependent,                // every pair tried had a vanishing resultant
  no_root,                  // resultants fine, but no integer root within the bounds
  spurious_root,            // roots found, none of them factors N
};
std::string to_string(AttackStatus s);
/// Process exit code used by the command-line tool.
int exit_code(AttackStatus s);

struct AttackOptions {
  LllOptions lll;
  /// Upper limit on filtered pairs handed to extraction.
  std::size_t max_pairs = 16;
  /// Keep the basis and reduced basis in the report (large).
  bool keep_lattice = false;
  /// Planted (d, ak, bk); enables the audit checks.
  std::optional<Point> planted_root;
};

struct StageTimes {
  double basis = 0, reduction = 0, filter = 0, extraction = 0, total = 0;
};

/// Checks only available when the root is known in advance.
struct PlantedAudit {
  bool root_within_bounds = false;
  bool f_vanishes = false;
  /// Every shift polynomial is 0 mod R at the root.
  bool rows_vanish_mod_r = false;
  /// Every filtered polynomial is 0 over the integers at the root.
  bool filtered_vanish = false;
  std::size_t filtered_nonvanishing = 0;
};

struct PairAttempt {
  std::size_t first = 0, second = 0;  // indices into AttackReport::filtered
  ExtractStatus status = ExtractStatus::no_root;
  std::string stage;
  std::size_t roots = 0;
  std::size_t spurious = 0;
};

struct AttackReport {
  AttackStatus status = AttackStatus::no_filtered_polynomials;
  std::string message;
  AttackPlan plan;
  ConditionDiagnostics condition;
  std::size_t lll_swaps = 0;
  std::size_t polish_swaps = 0;
  BigInt lattice_det;
  std::vector<FilteredPolynomial> filtered;
  std::vector<PairAttempt> pairs;
  std::optional<RootCandidate> root;
  std::optional<RecoveredKey> key;
  std::optional<PlantedAudit> audit;
  StageTimes times;
  std::optional<IntegerLattice> lattice;
  std::optional<ReducedBasis> reduced;

  bool succeeded() const { return status == AttackStatus::success; }
  std::size_t dependent_pairs() const;
};

/// plan -> basis -> LLL -> filter -> extract -> recover. Filtered pairs are
/// tried in order of ascending scaled norm until one factors N.
AttackReport run_attack(const AttackPlan& plan, const AttackOptions& options = {});

/// Planted mode: bounds from the instance's bit sizes, audit against
/// (d, ak, bk).
AttackReport attack_instance(const CommonPrimeInstance& inst, unsigned s, unsigned t, AttackOptions options = {});

}  // namespace cprsa
