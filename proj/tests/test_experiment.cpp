#include <gtest/gtest.h>

#include <sstream>

#include "cprsa/bounds.hpp"
#include "cprsa/experiment.hpp"

using namespace cprsa;

TEST(Experiment, TheoryDeltaMatchesPublishedRows) {
  struct Row {
    unsigned bits;
    Rational gamma;
    unsigned gamma_bits, delta_t;
  };
  const Row rows[] = {
      {1024, Rational(1, 5), 205, 168},    {1024, Rational(1, 4), 256, 186},
      {1024, Rational(3, 10), 307, 205},   {1024, Rational(7, 20), 359, 223},
      {1024, Rational(2, 5), 410, 242},    {1024, Rational(9, 20), 461, 261},
      {2048, Rational(1, 5), 408, 337},    {2048, Rational(1, 4), 512, 373},
      {2048, Rational(3, 10), 615, 410},   {2048, Rational(7, 20), 716, 447},
      {2048, Rational(2, 5), 820, 484},    {2048, Rational(9, 20), 920, 521},
  };
  for (const auto& r : rows) {
    EXPECT_EQ(theory_delta_bits(r.bits, r.gamma), r.delta_t) << r.bits << " " << r.gamma.get_str();
    // The published g sizes are within two bits of the nominal fraction.
    EXPECT_NEAR(double(gamma_bits_for(r.bits, r.gamma)), double(r.gamma_bits), 2.0);
  }
}

TEST(Experiment, DeskScaleTheoryDelta) {
  EXPECT_EQ(gamma_bits_for(512, Rational(1, 5)), 102u);
  EXPECT_EQ(theory_delta_bits(512, Rational(1, 5)), 84u);
  // 0.164384... * 512 = 84.16
  EXPECT_NEAR(bound_corrected(Rational(1, 5)).value.to_double() * 512, 84.16, 0.01);
}

TEST(Experiment, SmallCellAndCsv) {
  ExperimentConfig config;
  config.bits = {128};
  config.gamma_fractions = {Rational(1, 5)};
  config.s = 2;
  config.t = 0;
  config.trials = 1;
  config.seed = 7;
  const auto records = run_experiment(config);
  ASSERT_EQ(records.size(), 1u);
  const auto& rec = records[0];
  EXPECT_EQ(rec.bits, 128u);
  EXPECT_EQ(rec.gamma_bits, 26u);
  EXPECT_EQ(rec.omega, 27u);
  EXPECT_EQ(rec.delta_theory_bits, theory_delta_bits(128, Rational(1, 5)));
  EXPECT_LE(rec.delta_achieved_bits, rec.delta_theory_bits);
  EXPECT_GT(rec.delta_achieved_bits, 0u);
  EXPECT_NEAR(rec.achieving_rate, double(rec.delta_achieved_bits) / rec.delta_theory_bits, 1e-12);
  EXPECT_FALSE(rec.probes.empty());
  // Every probe at or below the answer passed; every probe above failed.
  for (const auto& p : rec.probes) EXPECT_EQ(p.passed, p.delta_bits <= rec.delta_achieved_bits);

  const std::string csv = experiment_csv(records);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0][0], '#');
  EXPECT_EQ(lines[1][0], '#');
  EXPECT_EQ(lines[2],
            "bits,gamma,gamma_bits,e_bits,delta_theory_bits,delta_achieved_bits,achieving_rate,s,t,omega,wall_time,"
            "timed_out,seed,trials");
  EXPECT_EQ(lines[3].substr(0, 4), "128,");
}
