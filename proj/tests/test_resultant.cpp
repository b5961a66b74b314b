#include <gtest/gtest.h>

#include <random>

#include "cprsa/polynomial.hpp"

using namespace cprsa;

namespace {

using QPoly = std::vector<Rational>;  // low to high

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Res(a, b) by the Euclidean recursion
//   Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r),  r = a mod b,
// with Res(a, c) = c^(deg a) for a constant c.
Rational euclid_resultant(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Rational acc = 1;
  while (true) {
    const long da = static_cast<long>(a.size()) - 1;
    const long db = static_cast<long>(b.size()) - 1;
    if (db == 0) {
      Rational p = 1;
      for (long i = 0; i < da; ++i) p *= b[0];
      return acc * p;
    }
    QPoly r = rem(a, b);
    if (r.empty()) return 0;
    const long dr = static_cast<long>(r.size()) - 1;
    if ((da * db) % 2 == 1) acc = -acc;
    for (long i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

// Coefficients of p in v after fixing the other two variables at `pt`.
QPoly specialise(const TrivariatePolynomial& p, Var v, const Point& pt) {
  QPoly out(p.degree(v) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    BigInt term = c;
    for (unsigned i = 0; i < 3; ++i)
      if (i != static_cast<unsigned>(v)) term *= pow(pt[i], m[i]);
    out[m[static_cast<unsigned>(v)]] += Rational(term);
  }
  return out;
}

TrivariatePolynomial random_poly(std::mt19937& rng, unsigned max_deg, int terms, long range) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-range, range);
  TrivariatePolynomial p;
  for (int i = 0; i < terms; ++i) p.add_term({deg(rng), deg(rng), deg(rng)}, BigInt(coef(rng)));
  return p;
}

const auto X1 = TrivariatePolynomial::variable(Var::x1);
const auto X2 = TrivariatePolynomial::variable(Var::x2);
const auto X3 = TrivariatePolynomial::variable(Var::x3);
TrivariatePolynomial c(long v) { return TrivariatePolynomial(BigInt(v)); }

}  // namespace

TEST(Resultant, KnownSmallCases) {
  // Res_x1(x1^2 - 2, x1 - x2) = x2^2 - 2
  EXPECT_EQ(resultant(X1 * X1 - c(2), X1 - X2, Var::x1), X2 * X2 - c(2));
  // Res_x1(a x1 + b, c x1 + d) = ad - bc
  EXPECT_EQ(resultant(c(3) * X1 + X2, c(5) * X1 + X3, Var::x1), c(3) * X3 - c(5) * X2);
}

TEST(Resultant, IdenticalInputsVanish) {
  const auto f = X1 * X2 + X3 * X3 - c(7) * X2 * X3 + c(1);
  EXPECT_TRUE(resultant(f, f, Var::x3).is_zero());
  EXPECT_TRUE(resultant(f, f * (X1 + c(2)), Var::x3).is_zero());
}

TEST(Resultant, RequiresTheVariable) {
  EXPECT_THROW(resultant(X1 + c(1), X2 * X3, Var::x3), std::invalid_argument);
}

TEST(Resultant, MatchesEuclideanOracleAtRandomPoints) {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int pair = 0; pair < 50; ++pair) {
    const auto f = random_poly(rng, 2, 6, 20);
    const auto g = random_poly(rng, 2, 6, 20);
    const Var v = static_cast<Var>(pair % 3);
    if (!f.contains(v) || !g.contains(v)) continue;
    const auto res = resultant(f, g, v);
    EXPECT_FALSE(res.contains(v));
    std::uniform_int_distribution<long> d(-9, 9);
    for (int k = 0; k < 12; ++k) {
      const Point pt{BigInt(d(rng)), BigInt(d(rng)), BigInt(d(rng))};
      // The specialised Sylvester matrix only equals the specialised
      // resultant when the leading coefficients survive.
      QPoly fs = specialise(f, v, pt), gs = specialise(g, v, pt);
      if (fs.back() == 0 || gs.back() == 0) continue;
      EXPECT_EQ(Rational(res.eval(pt)), euclid_resultant(fs, gs)) << "pair " << pair;
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(Resultant, CommonRootSurvivesElimination) {
  std::mt19937 rng(99);
  const Point root{BigInt(4), BigInt(-3), BigInt(5)};
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(rng, 2, 5, 15);
    auto g = random_poly(rng, 2, 5, 15);
    f -= c(1) * TrivariatePolynomial(f.eval(root));
    g -= c(1) * TrivariatePolynomial(g.eval(root));
    if (!f.contains(Var::x3) || !g.contains(Var::x3)) continue;
    EXPECT_EQ(resultant(f, g, Var::x3).eval(root), 0);
  }
}
