#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cprsa/attack.hpp"
#include "cprsa/bigint.hpp"

namespace cprsa {

/// bound_corrected(gamma) * bits rounded to the nearest integer, gamma being
/// the nominal fraction (0.2, 0.25, ...) rather than gamma_bits / bits.
unsigned theory_delta_bits(unsigned bits, const Rational& gamma);

struct ProbeResult {
  unsigned delta_bits = 0;
  unsigned successes = 0;
  unsigned attempts = 0;
  bool passed = false;  // majority of `trials`
};

struct ExperimentRecord {
  unsigned bits = 0;
  unsigned gamma_bits = 0;
  Rational gamma;  // nominal fraction; gamma_bits = round(gamma * bits)
  unsigned e_bits = 0;
  unsigned delta_theory_bits = 0;
  unsigned delta_achieved_bits = 0;  // 0 when no probe succeeded
  double achieving_rate = 0;         // delta_achieved / delta_theory
  unsigned s = 0, t = 0;
  std::size_t omega = 0;
  double wall_time = 0;
  bool timed_out = false;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  std::vector<ProbeResult> probes;
};

struct ExperimentConfig {
  std::vector<unsigned> bits;
  /// gamma as a fraction of bits; gamma_bits = round(fraction * bits).
  std::vector<Rational> gamma_fractions;
  unsigned s = 2, t = 1;
  unsigned trials = 3;
  /// Trial i of every probe uses seed + i, independent of (s, t).
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Per-cell wall-clock budget in seconds; 0 disables it.
  double cell_timeout = 0;
  /// Probed first when nonzero: on success it becomes the lower end of the
  /// search, otherwise the upper end.
  unsigned start_delta_bits = 0;
  AttackOptions attack;
  std::function<void(const std::string&)> log;
  /// Called after every attack, on the thread running the cell.
  std::function<void(const CommonPrimeInstance&, const AttackReport&)> on_attack;
};

/// Binary search over delta_bits in [2, delta_theory] for the largest value
/// at which a majority of `trials` planted instances are factored. Assumes
/// success is monotone in delta; stops early on timeout and keeps the best
/// value found so far.
ExperimentRecord run_cell(unsigned bits, const Rational& gamma, const ExperimentConfig& config);

/// round(gamma * bits), halves rounded up.
unsigned gamma_bits_for(unsigned bits, const Rational& gamma);

/// Every (bits, gamma) cell, up to config.jobs at a time.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

std::string experiment_csv(const std::vector<ExperimentRecord>& records);

}  // namespace cprsa
