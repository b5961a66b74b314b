#include "cprsa/experiment.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "cprsa/bounds.hpp"

namespace cprsa {

namespace {

unsigned round_half_up(const Rational& x) {
  const Rational shifted = x + Rational(1, 2);
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return static_cast<unsigned>(out.get_ui());
}

}  // namespace

unsigned gamma_bits_for(unsigned bits, const Rational& gamma) { return round_half_up(gamma * bits); }

unsigned theory_delta_bits(unsigned bits, const Rational& gamma) {
  const Surd bound = bound_corrected(gamma).value;
  if (auto exact = bound.exact()) return round_half_up(*exact * bits);
  // Irrational: bound * bits + 1/2 is never an integer, so 256 bits settle the floor.
  const Real shifted = bound.value(256) * Real(BigInt(bits), 256) + Real(0.5, 256);
  return static_cast<unsigned>(shifted.floor().get_ui());
}

namespace {

using Clock = std::chrono::steady_clock;

struct CellRunner {
  CellRunner(unsigned b, const Rational& g, const ExperimentConfig& c)
      : bits(b), gamma(g), gamma_bits(gamma_bits_for(b, g)), config(c) {}

  unsigned bits;
  Rational gamma;
  unsigned gamma_bits;
  const ExperimentConfig& config;
  Clock::time_point start = Clock::now();
  ExperimentRecord record;

  bool out_of_time() const {
    return config.cell_timeout > 0 &&
           std::chrono::duration<double>(Clock::now() - start).count() > config.cell_timeout;
  }

  void log(const std::string& msg) const {
    if (config.log) config.log(msg);
  }

  ProbeResult probe(unsigned delta_bits) {
    ProbeResult p;
    p.delta_bits = delta_bits;
    const unsigned need = config.trials / 2 + 1;
    for (unsigned i = 0; i < config.trials; ++i) {
      if (p.successes >= need || p.attempts - p.successes > config.trials - need) break;
      if (out_of_time()) {
        record.timed_out = true;
        break;
      }
      ++p.attempts;
      try {
        const CommonPrimeInstance inst = generate_instance(bits, gamma_bits, delta_bits, config.seed + i);
        const AttackReport rep = attack_instance(inst, config.s, config.t, config.attack);
        if (rep.succeeded()) ++p.successes;
        if (config.on_attack) config.on_attack(inst, rep);
        log("bits=" + std::to_string(bits) + " gamma_bits=" + std::to_string(gamma_bits) +
            " delta_bits=" + std::to_string(delta_bits) + " seed=" + std::to_string(config.seed + i) + " " +
            to_string(rep.status));
      } catch (const std::exception& ex) {
        log(std::string("trial failed: ") + ex.what());
      }
    }
    p.passed = p.successes >= need;
    return p;
  }

  ExperimentRecord run() {
    record.bits = bits;
    record.gamma_bits = gamma_bits;
    record.gamma = gamma;
    record.s = config.s;
    record.t = config.t;
    record.seed = config.seed;
    record.trials = config.trials;
    record.delta_theory_bits = theory_delta_bits(bits, gamma);
    record.omega = monomials_M(config.s, config.t).size();

    // lo: largest delta known to succeed (1 stands for "none yet"); hi: smallest known to fail.
    unsigned lo = 1;
    unsigned hi = record.delta_theory_bits + 1;
    if (config.start_delta_bits >= 2 && config.start_delta_bits < hi) {
      ProbeResult p = probe(config.start_delta_bits);
      record.probes.push_back(p);
      (p.passed ? lo : hi) = config.start_delta_bits;
    }
    while (hi - lo > 1 && !record.timed_out) {
      const unsigned mid = lo + (hi - lo) / 2;
      ProbeResult p = probe(mid);
      record.probes.push_back(p);
      if (record.timed_out && !p.passed) break;
      (p.passed ? lo : hi) = mid;
    }
    record.delta_achieved_bits = lo >= 2 ? lo : 0;
    if (record.delta_theory_bits > 0)
      record.achieving_rate = static_cast<double>(record.delta_achieved_bits) / record.delta_theory_bits;
    try {
      const unsigned db = std::max(2u, record.delta_achieved_bits);
      record.e_bits = static_cast<unsigned>(bit_length(generate_instance(bits, gamma_bits, db, config.seed).e));
    } catch (const std::exception&) {
      record.e_bits = 0;
    }
    record.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return record;
  }
};

}  // namespace

ExperimentRecord run_cell(unsigned bits, const Rational& gamma, const ExperimentConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be positive");
  CellRunner runner(bits, gamma, config);
  return runner.run();
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  struct Cell {
    unsigned bits;
    Rational gamma;
  };
  std::vector<Cell> cells;
  for (unsigned b : config.bits)
    for (const Rational& frac : config.gamma_fractions) cells.push_back({b, frac});
  std::vector<ExperimentRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        records[i] = run_cell(cells[i].bits, cells[i].gamma, config);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return records;
}

std::string experiment_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "# AR = delta_achieved_bits / delta_theory_bits, delta_theory_bits = round(corrected_bound(gamma) * bits)\n";
  out << "# delta_achieved_bits: binary search over delta bits, majority of trials per probe (this tool's procedure)\n";
  out << "bits,gamma,gamma_bits,e_bits,delta_theory_bits,delta_achieved_bits,achieving_rate,s,t,omega,wall_time,timed_out,"
         "seed,trials\n";
  for (const auto& r : records) {
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.4f", r.achieving_rate);
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_time);
    out << r.bits << ',' << Real(r.gamma).to_string(6) << ',' << r.gamma_bits << ',' << r.e_bits << ',' << r.delta_theory_bits << ','
        << r.delta_achieved_bits << ',' << rate << ',' << r.s << ',' << r.t << ',' << r.omega << ',' << wall << ','
        << (r.timed_out ? 1 : 0) << ',' << r.seed << ',' << r.trials << '\n';
  }
  return out.str();
}

}  // namespace cprsa
