#include "cprsa/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cprsa {

using nlohmann::json;

json instance_to_json(const CommonPrimeInstance& inst) {
  return json{{"n", to_decimal(inst.n)},
              {"p", to_decimal(inst.p)},
              {"q", to_decimal(inst.q)},
              {"g", to_decimal(inst.g)},
              {"a", to_decimal(inst.a)},
              {"b", to_decimal(inst.b)},
              {"h", to_decimal(inst.h)},
              {"e", to_decimal(inst.e)},
              {"d", to_decimal(inst.d)},
              {"k", to_decimal(inst.k)},
              {"bits", std::to_string(inst.bits)},
              {"gamma_bits", std::to_string(inst.gamma_bits)},
              {"delta_bits", std::to_string(inst.delta_bits)},
              {"seed", std::to_string(inst.seed)}};
}

namespace {

std::string field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field ") + name);
  const json& v = j.at(name);
  if (!v.is_string()) throw std::invalid_argument(std::string("field ") + name + " must be a decimal string");
  return v.get<std::string>();
}

BigInt big_field(const json& j, const char* name) { return from_decimal(field(j, name)); }

template <typename T>
T small_field(const json& j, const char* name) {
  const BigInt v = big_field(j, name);
  if (v < 0 || bit_length(v) > 8 * sizeof(T)) throw std::invalid_argument(std::string("field ") + name + " out of range");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return static_cast<T>(out);
}

}  // namespace

CommonPrimeInstance instance_from_json(const json& j) {
  CommonPrimeInstance inst;
  inst.n = big_field(j, "n");
  inst.p = big_field(j, "p");
  inst.q = big_field(j, "q");
  inst.g = big_field(j, "g");
  inst.a = big_field(j, "a");
  inst.b = big_field(j, "b");
  inst.h = big_field(j, "h");
  inst.e = big_field(j, "e");
  inst.d = big_field(j, "d");
  inst.k = big_field(j, "k");
  inst.bits = small_field<unsigned>(j, "bits");
  inst.gamma_bits = small_field<unsigned>(j, "gamma_bits");
  inst.delta_bits = small_field<unsigned>(j, "delta_bits");
  inst.seed = small_field<std::uint64_t>(j, "seed");
  return inst;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_instance(const std::string& path, const CommonPrimeInstance& inst) {
  write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

CommonPrimeInstance read_instance(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
  return instance_from_json(j);
}

void write_lattice(std::ostream& out, const IntMatrix& rows) {
  out << rows.size() << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].get_str();
    out << '\n';
  }
}

IntMatrix read_lattice(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty lattice file");
  const BigInt dim_big = from_decimal(line.substr(0, line.find_last_not_of(" \r\t") + 1));
  if (dim_big < 0 || dim_big > 100000) throw std::invalid_argument("bad lattice dimension");
  const std::size_t dim = dim_big.get_ui();
  IntMatrix rows;
  while (rows.size() < dim && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<BigInt> row;
    std::string tok;
    while (ls >> tok) row.push_back(from_decimal(tok));
    if (row.empty()) continue;
    if (row.size() != dim) throw std::invalid_argument("lattice row " + std::to_string(rows.size()) + " has " +
                                                       std::to_string(row.size()) + " entries, expected " +
                                                       std::to_string(dim));
    rows.push_back(std::move(row));
  }
  if (rows.size() != dim) throw std::invalid_argument("lattice file ends early");
  return rows;
}

json monomial_labels_json(const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(monomial_label(m));
  return out;
}

json condition_json(const ConditionDiagnostics& c) {
  return json{{"det_bits", c.det_bits},
              {"r_pow_omega_bits", c.r_pow_omega_bits},
              {"general_holds", c.general_holds},
              {"monomial_side_bits", c.monomial_side_bits},
              {"xinf_side_bits", c.xinf_side_bits},
              {"reduced_holds", c.reduced_holds},
              {"forms_agree", c.agree},
              {"two_vector_holds", c.two_vector_holds},
              {"margin_bits", c.margin_bits}};
}

json attack_report_json(const AttackReport& r, std::uint64_t seed) {
  const AttackPlan& plan = r.plan;
  json j;
  j["version"] = kVersion;
  j["seed"] = std::to_string(seed);
  j["status"] = to_string(r.status);
  j["message"] = r.message;
  j["parameters"] = json{{"n", to_decimal(plan.n)},
                         {"e", to_decimal(plan.e)},
                         {"s", plan.s},
                         {"t", plan.t},
                         {"omega", plan.omega},
                         {"delta", plan.delta},
                         {"gamma", plan.gamma},
                         {"X1", to_decimal(plan.X1)},
                         {"X2", to_decimal(plan.X2)},
                         {"X3", to_decimal(plan.X3)},
                         {"R_bits", bit_length(plan.R)}};
  j["condition"] = condition_json(r.condition);
  j["lattice"] = json{{"det_bits", bit_length(r.lattice_det)}, {"lll_swaps", r.lll_swaps}, {"polish_swaps", r.polish_swaps}};
  json filtered = json::array();
  for (const auto& fp : r.filtered) {
    filtered.push_back(json{{"row", fp.source_index},
                            {"scaled_norm_bits", bit_length(fp.scaled_norm_sq) / 2},
                            {"degenerate", fp.degenerate}});
  }
  j["filtered_count"] = r.filtered.size();
  j["filtered"] = filtered;
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json{{"first", p.first},
                         {"second", p.second},
                         {"status", to_string(p.status)},
                         {"stage", p.stage},
                         {"roots", p.roots},
                         {"spurious", p.spurious}});
  }
  j["pairs"] = pairs;
  j["dependent_pairs"] = r.dependent_pairs();
  j["timings"] = json{{"basis", r.times.basis},
                      {"reduction", r.times.reduction},
                      {"filter", r.times.filter},
                      {"extraction", r.times.extraction},
                      {"total", r.times.total}};
  if (r.audit) {
    j["audit"] = json{{"root_within_bounds", r.audit->root_within_bounds},
                      {"f_vanishes", r.audit->f_vanishes},
                      {"rows_vanish_mod_r", r.audit->rows_vanish_mod_r},
                      {"filtered_vanish", r.audit->filtered_vanish},
                      {"filtered_nonvanishing", r.audit->filtered_nonvanishing}};
  }
  if (r.root) {
    j["root"] = json{{"x1", to_decimal(r.root->x1)}, {"x2", to_decimal(r.root->x2)}, {"x3", to_decimal(r.root->x3)}};
  }
  if (r.key) {
    j["key"] = json{{"p", to_decimal(r.key->p)}, {"q", to_decimal(r.key->q)}, {"g", to_decimal(r.key->g)},
                    {"a", to_decimal(r.key->a)}, {"b", to_decimal(r.key->b)}, {"k", to_decimal(r.key->k)}};
  }
  return j;
}

}  // namespace cprsa
