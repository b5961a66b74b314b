#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cprsa/attack.hpp"
#include "cprsa/keygen.hpp"
#include "cprsa/lll.hpp"

namespace cprsa {

inline constexpr const char* kVersion = "0.1.0";

/// All fields as decimal strings: n, p, q, g, a, b, h, e, d, k, bits,
/// gamma_bits, delta_bits, seed.
nlohmann::json instance_to_json(const CommonPrimeInstance& inst);
/// Throws std::invalid_argument on a missing or malformed field.
CommonPrimeInstance instance_from_json(const nlohmann::json& j);

void write_instance(const std::string& path, const CommonPrimeInstance& inst);
CommonPrimeInstance read_instance(const std::string& path);

/// First line the dimension w, then w lines of w decimal integers.
void write_lattice(std::ostream& out, const IntMatrix& rows);
/// Throws std::invalid_argument unless the text describes a w x w matrix.
IntMatrix read_lattice(std::istream& in);
nlohmann::json monomial_labels_json(const std::vector<Monomial>& monomials);

nlohmann::json condition_json(const ConditionDiagnostics& c);
/// Everything needed to rerun the attack: parameters, seed, tool version,
/// per-stage timings, filter and extraction statistics and, on success, the
/// factors.
nlohmann::json attack_report_json(const AttackReport& report, std::uint64_t seed);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cprsa
