#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cprsa/io.hpp"
#include "cprsa/keygen.hpp"

using namespace cprsa;
using nlohmann::json;

TEST(Io, InstanceRoundTrip) {
  const auto inst = generate_instance(256, 51, 40, 4);
  const json j = instance_to_json(inst);
  for (const char* key : {"n", "p", "q", "g", "a", "b", "h", "e", "d", "k", "bits", "gamma_bits", "delta_bits", "seed"})
    EXPECT_TRUE(j.at(key).is_string()) << key;
  EXPECT_EQ(j.at("seed"), "4");
  const auto back = instance_from_json(json::parse(j.dump()));
  EXPECT_EQ(instance_to_json(back), j);
  EXPECT_TRUE(verify_instance(back).all_passed());

  const auto path = (std::filesystem::temp_directory_path() / "cprsa_io_instance.json").string();
  write_instance(path, inst);
  EXPECT_EQ(instance_to_json(read_instance(path)), j);
  std::filesystem::remove(path);
}

TEST(Io, MalformedInstances) {
  json j = instance_to_json(generate_instance(128, 26, 20, 1));
  json missing = j;
  missing.erase("d");
  EXPECT_THROW(instance_from_json(missing), std::invalid_argument);
  json numeric = j;
  numeric["e"] = 5;
  EXPECT_THROW(instance_from_json(numeric), std::invalid_argument);
  json garbage = j;
  garbage["n"] = "12x4";
  EXPECT_THROW(instance_from_json(garbage), std::invalid_argument);
  json negative = j;
  negative["bits"] = "-3";
  EXPECT_THROW(instance_from_json(negative), std::invalid_argument);
  EXPECT_THROW(instance_from_json(json::array()), std::invalid_argument);

  const auto path = (std::filesystem::temp_directory_path() / "cprsa_io_bad.json").string();
  write_text_file(path, "{ not json");
  EXPECT_THROW(read_instance(path), std::invalid_argument);
  std::filesystem::remove(path);
  EXPECT_THROW(read_instance(path), std::runtime_error);
}

TEST(Io, LatticeTextRoundTrip) {
  const IntMatrix m{{BigInt(1), BigInt(-2), BigInt(0)},
                    {from_decimal("123456789012345678901234567890"), BigInt(5), BigInt(6)},
                    {BigInt(0), BigInt(0), BigInt(-7)}};
  std::stringstream ss;
  write_lattice(ss, m);
  EXPECT_EQ(ss.str().substr(0, 2), "3\n");
  EXPECT_EQ(read_lattice(ss), m);
}

TEST(Io, MalformedLattices) {
  std::istringstream empty("");
  EXPECT_THROW(read_lattice(empty), std::invalid_argument);
  std::istringstream short_row("2\n1 2\n3\n");
  EXPECT_THROW(read_lattice(short_row), std::invalid_argument);
  std::istringstream truncated("3\n1 0 0\n0 1 0\n");
  EXPECT_THROW(read_lattice(truncated), std::invalid_argument);
  std::istringstream bad_token("2\n1 a\n0 1\n");
  EXPECT_THROW(read_lattice(bad_token), std::invalid_argument);
}

TEST(Io, MonomialLabels) {
  const json j = monomial_labels_json({{0, 0, 0}, {3, 1, 2}});
  EXPECT_EQ(j, json::parse(R"(["x1^0*x2^0*x3^0", "x1^3*x2^1*x3^2"])"));
}
