// Command-line front end: key generation, the lattice attack, bound tables,
// region export and the delta search harness.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cprsa/attack.hpp"
#include "cprsa/bounds.hpp"
#include "cprsa/experiment.hpp"
#include "cprsa/io.hpp"
#include "cprsa/keygen.hpp"
#include "cprsa/lattice.hpp"
#include "cprsa/lll.hpp"

using namespace cprsa;

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected a rational such as 0.2 or 1/5, got '" + text + "'");
  }
}

LllMethod method_arg(const std::string& name) {
  if (name == "exact") return LllMethod::exact;
  if (name == "floating") return LllMethod::floating;
  throw CLI::ValidationError("--lll", "expected exact or floating");
}

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct KeygenArgs {
  unsigned bits = 0, gamma_bits = 0, delta_bits = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_keygen(const KeygenArgs& a) {
  CommonPrimeInstance inst;
  try {
    inst = generate_instance(a.bits, a.gamma_bits, a.delta_bits, a.seed);
  } catch (const InfeasibleParameters& ex) {
    std::cerr << "infeasible parameters: " << ex.what() << '\n';
    return 1;
  }
  const VerificationReport report = verify_instance(inst);
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) std::cerr << "check failed: " << c.name << ' ' << c.detail << '\n';
    return 1;
  }
  emit(a.out, instance_to_json(inst).dump(2) + "\n");
  std::cerr << "N: " << bit_length(inst.n) << " bits, g: " << bit_length(inst.g) << " bits, d: " << bit_length(inst.d)
            << " bits, gcd(k, 2g) = " << inst.k_gcd_2g() << '\n';
  return 0;
}

struct AttackArgs {
  std::string instance;
  std::string n, e, delta, gamma;
  unsigned s = 2, t = 1;
  bool auto_tau = false;
  std::string lll = "floating";
  std::size_t max_pairs = 16;
  std::uint64_t seed = 0;
  std::string out;
  std::string export_lattice;
};

int cmd_attack(const AttackArgs& a, bool t_given) {
  AttackOptions options;
  options.lll.method = method_arg(a.lll);
  options.max_pairs = a.max_pairs;

  AttackPlan plan;
  std::uint64_t seed = a.seed;
  unsigned t = a.t;
  if (!a.instance.empty()) {
    const CommonPrimeInstance inst = read_instance(a.instance);
    seed = inst.seed;
    if (a.auto_tau) {
      const Rational delta(inst.delta_bits, inst.bits);
      const Rational gamma(inst.gamma_bits, inst.bits);
      t = t_from_tau(optimal_tau(gamma, delta).tau, a.s);
    }
    plan = make_plan_for_sizes(inst.n, inst.e, a.s, t, inst.delta_bits, inst.gamma_bits);
    options.planted_root = Point{inst.d, inst.a * inst.k, inst.b * inst.k};
  } else {
    if (a.n.empty() || a.e.empty() || a.delta.empty() || a.gamma.empty())
      throw CLI::ValidationError("attack", "give --instance, or all of --n, --e, --delta and --gamma");
    const Rational delta = rational_arg(a.delta, "--delta");
    const Rational gamma = rational_arg(a.gamma, "--gamma");
    if (a.auto_tau) t = t_from_tau(optimal_tau(gamma, delta).tau, a.s);
    plan = make_plan(from_decimal(a.n), from_decimal(a.e), a.s, t, delta, gamma);
  }
  if (a.auto_tau && t_given) std::cerr << "note: --auto-tau overrides --t\n";
  std::cerr << "s=" << plan.s << " t=" << plan.t << " omega=" << plan.omega << '\n';

  if (!a.export_lattice.empty()) {
    const IntegerLattice lattice = build_basis(plan, build_attack_polynomial(plan.n, plan.e));
    std::ofstream out(a.export_lattice);
    write_lattice(out, lattice.rows);
    write_text_file(a.export_lattice + ".labels.json", monomial_labels_json(lattice.columns).dump() + "\n");
  }

  const AttackReport report = run_attack(plan, options);
  if (!report.condition.general_holds)
    std::cerr << "warning: det(L) < R^omega does not hold (margin " << fmt(report.condition.margin_bits)
              << " bits); attempting anyway\n";
  if (report.audit) {
    const auto& au = *report.audit;
    std::cerr << "audit: root in bounds " << au.root_within_bounds << ", f(root)=0 " << au.f_vanishes
              << ", rows 0 mod R " << au.rows_vanish_mod_r << ", filtered vanish " << au.filtered_vanish << '\n';
  }
  std::cerr << "filtered " << report.filtered.size() << ", pairs tried " << report.pairs.size() << ", "
            << to_string(report.status) << " (" << fmt(report.times.total, 4) << " s)\n";
  emit(a.out, attack_report_json(report, seed).dump(2) + "\n");
  return exit_code(report.status);
}

int cmd_bounds(const std::string& gamma_text) {
  const Rational gamma = rational_arg(gamma_text, "--gamma");
  auto show = [](const char* name, const std::optional<Surd>& v) {
    std::cout << name << ": " << (v ? fmt(v->to_double(), 10) : std::string("-")) << '\n';
  };
  const OtherBounds o = bounds_others(gamma);
  const CorrectedBound c = bound_corrected(gamma);
  const MumtazLuoAudit ml = audit_mumtaz_luo(gamma);
  std::cout << "gamma: " << fmt(gamma.get_d(), 10) << '\n';
  show("wiener", o.wiener);
  show("hinek_sq", o.hinek_sq);
  show("hinek_lin", o.hinek_lin);
  show("jochemsz_may", bound_jochemsz_may(gamma));
  show("sarkar_maitra", o.sarkar_maitra);
  show("lu", o.lu);
  show("ml_flawed", ml.flawed);
  show("ml_constraint", ml.constraint);
  show("ml_repaired", ml.repaired);
  show("corrected", c.value);
  std::cout << "corrected_branch: " << to_string(c.branch) << '\n';
  return 0;
}

struct ExperimentArgs {
  std::vector<unsigned> bits;
  std::vector<std::string> gammas;
  unsigned s = 2, t = 1, trials = 3, jobs = 1;
  std::uint64_t seed = 1;
  double timeout = 0;
  std::string out;
};

int cmd_experiment(const ExperimentArgs& a) {
  ExperimentConfig config;
  config.bits = a.bits;
  for (const auto& g : a.gammas) config.gamma_fractions.push_back(rational_arg(g, "--gamma"));
  config.s = a.s;
  config.t = a.t;
  config.trials = a.trials;
  config.seed = a.seed;
  config.jobs = a.jobs;
  config.cell_timeout = a.timeout;
  if (monomials_M(a.s, a.t).size() > 125) std::cerr << "warning: omega above 125 is beyond desk scale\n";
  config.log = [](const std::string& msg) { std::cerr << msg << '\n'; };
  const auto records = run_experiment(config);
  emit(a.out, experiment_csv(records));
  return 0;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path, const std::string& method) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open " + in_path);
  const IntMatrix basis = read_lattice(in);
  LllOptions options;
  options.method = method_arg(method);
  const ReducedBasis reduced = lll_reduce(basis, options);
  const bool cert = verify_certificate(basis, reduced);
  const ReductionCheck check = check_lll_reduced(reduced.vectors);
  std::ostringstream text;
  write_lattice(text, reduced.vectors);
  emit(out_path, text.str());
  std::cerr << "swaps " << reduced.swaps << ", certificate " << (cert ? "ok" : "FAILED") << ", reduced "
            << (check.ok() ? "ok" : "FAILED") << '\n';
  return cert && check.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small private exponent lattice attack on common prime RSA"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a common prime RSA instance as JSON");
  keygen->add_option("--bits", kg.bits, "Modulus size in bits")->required();
  keygen->add_option("--gamma-bits", kg.gamma_bits, "Size of the common prime g")->required();
  keygen->add_option("--delta-bits", kg.delta_bits, "Size of the private exponent d")->required();
  keygen->add_option("--seed", kg.seed, "RNG seed")->capture_default_str();
  keygen->add_option("--out", kg.out, "Output path (default stdout)");

  AttackArgs at;
  auto* attack = app.add_subcommand("attack", "Run the lattice attack and print a JSON report");
  attack->add_option("--instance", at.instance, "Instance JSON (planted mode, enables the audit)");
  attack->add_option("--n", at.n, "Modulus N");
  attack->add_option("--e", at.e, "Public exponent e");
  attack->add_option("--delta", at.delta, "Size hint: d < N^delta");
  attack->add_option("--gamma", at.gamma, "Size hint: g ~ N^gamma");
  attack->add_option("--s", at.s, "Lattice parameter s")->capture_default_str()->check(CLI::PositiveNumber);
  auto* t_opt = attack->add_option("--t", at.t, "Extra x1 shifts t")->capture_default_str();
  attack->add_flag("--auto-tau", at.auto_tau, "t = round(optimal_tau(gamma, delta) * s)");
  attack->add_option("--lll", at.lll, "LLL arithmetic: floating or exact")->capture_default_str();
  attack->add_option("--max-pairs", at.max_pairs, "Filtered pairs to try")->capture_default_str();
  attack->add_option("--seed", at.seed, "Seed recorded in the report when attacking raw (N, e)");
  attack->add_option("--out", at.out, "Report path (default stdout)");
  attack->add_option("--export-lattice", at.export_lattice, "Also write the basis in text form");

  std::string gamma_text;
  auto* bounds = app.add_subcommand("bounds", "Print every bound at one gamma");
  bounds->add_option("--gamma", gamma_text, "gamma in [0, 1/2]")->required();

  unsigned grid = 500;
  std::string region_out;
  auto* region = app.add_subcommand("region", "Export the bound curves as CSV");
  region->add_option("--grid-points", grid, "Number of gamma values in (0, 1/2]")->capture_default_str();
  region->add_option("--out", region_out, "CSV path (default stdout)");

  ExperimentArgs ex;
  auto* experiment = app.add_subcommand("experiment", "Binary-search the achievable delta on planted instances");
  experiment->add_option("--bits", ex.bits, "Modulus sizes")->required();
  experiment->add_option("--gamma", ex.gammas, "gamma as a fraction of bits, e.g. 0.2")->required();
  experiment->add_option("--s", ex.s, "Lattice parameter s")->capture_default_str()->check(CLI::PositiveNumber);
  experiment->add_option("--t", ex.t, "Extra x1 shifts t")->capture_default_str();
  experiment->add_option("--trials", ex.trials, "Instances per probe")->capture_default_str()->check(CLI::PositiveNumber);
  experiment->add_option("--seed", ex.seed, "Base seed")->capture_default_str();
  experiment->add_option("--jobs", ex.jobs, "Cells run concurrently")->capture_default_str();
  experiment->add_option("--timeout", ex.timeout, "Per-cell time budget in seconds (0 = none)")->capture_default_str();
  experiment->add_option("--out", ex.out, "CSV path (default stdout)");

  std::string reduce_in, reduce_out, reduce_method = "floating";
  auto* reduce = app.add_subcommand("reduce", "LLL-reduce a lattice in text form");
  reduce->add_option("--in", reduce_in, "Lattice text file")->required();
  reduce->add_option("--out", reduce_out, "Output path (default stdout)");
  reduce->add_option("--lll", reduce_method, "floating or exact")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*keygen) return cmd_keygen(kg);
    if (*attack) return cmd_attack(at, t_opt->count() > 0);
    if (*bounds) return cmd_bounds(gamma_text);
    if (*region) {
      emit(region_out, region_csv(region_sweep(uniform_gamma_grid(grid))));
      return 0;
    }
    if (*experiment) return cmd_experiment(ex);
    if (*reduce) return cmd_reduce(reduce_in, reduce_out, reduce_method);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
