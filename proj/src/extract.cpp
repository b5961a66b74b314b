#include "cprsa/extract.hpp"

#include <algorithm>
#include <set>

namespace cprsa {

bool howgrave_graham_passes(const BigInt& scaled_norm_sq, const AttackPlan& plan) {
  return scaled_norm_sq * static_cast<unsigned long>(plan.omega) < plan.R * plan.R;
}

std::vector<FilteredPolynomial> howgrave_filter(const std::vector<TrivariatePolynomial>& polys,
                                                const AttackPlan& plan) {
  std::vector<FilteredPolynomial> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const BigInt norm = norm2_sq(polys[i].scale_vars(plan.X1, plan.X2, plan.X3));
    if (!howgrave_graham_passes(norm, plan)) continue;
    out.push_back({polys[i], norm, i, polys[i].is_zero()});
  }
  return out;
}

std::string to_string(ExtractStatus s) {
  switch (s) {
    case ExtractStatus::found:
      return "found";
    case ExtractStatus::dependent:
      return "dependent";
    case ExtractStatus::no_root:
      return "no-root";
  }
  return "unknown";
}

namespace {

// Eliminates v from a and b. When one side does not involve v the
// resultant degenerates to a power of it.
TrivariatePolynomial eliminate(const TrivariatePolynomial& a, const TrivariatePolynomial& b, Var v) {
  const unsigned da = a.degree(v);
  const unsigned db = b.degree(v);
  if (a.is_zero() || b.is_zero()) return {};
  if (da == 0 && db == 0) return a;
  auto power = [](const TrivariatePolynomial& p, unsigned k) {
    TrivariatePolynomial r(BigInt(1));
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
  };
  if (da == 0) return power(a, db);
  if (db == 0) return power(b, da);
  return resultant(a, b, v);
}

std::vector<BigInt> roots_in(const TrivariatePolynomial& p, Var v, const BigInt& bound, bool& identically_zero) {
  identically_zero = p.is_zero();
  if (identically_zero || !p.contains(v)) return {};
  return univariate_integer_roots(p.to_univariate(v), bound);
}

}  // namespace

ExtractOutcome extract_root(const TrivariatePolynomial& f, const TrivariatePolynomial& f1,
                            const TrivariatePolynomial& f2, const AttackPlan& plan) {
  ExtractOutcome out;
  const TrivariatePolynomial g1 = eliminate(f, f1, Var::x3);
  if (g1.is_zero()) {
    out.status = ExtractStatus::dependent;
    out.stage = "g1";
    return out;
  }
  const TrivariatePolynomial g2 = eliminate(f, f2, Var::x3);
  if (g2.is_zero()) {
    out.status = ExtractStatus::dependent;
    out.stage = "g2";
    return out;
  }
  const TrivariatePolynomial h = eliminate(g1, g2, Var::x2);
  if (h.is_zero() || h.contains(Var::x2) || h.contains(Var::x3)) {
    out.status = ExtractStatus::dependent;
    out.stage = "h";
    return out;
  }
  out.h_degree = static_cast<int>(h.degree(Var::x1));

  bool zero = false;
  std::vector<BigInt> x1s = roots_in(h, Var::x1, plan.X1, zero);
  std::set<std::array<BigInt, 3>> seen;
  for (const BigInt& x1 : x1s) {
    std::vector<BigInt> x2s;
    for (const auto* g : {&g1, &g2}) {
      x2s = roots_in(g->substitute(Var::x1, x1), Var::x2, plan.X2, zero);
      if (!zero) break;
    }
    for (const BigInt& x2 : x2s) {
      std::vector<BigInt> x3s;
      for (const auto* p : {&f, &f1, &f2}) {
        x3s = roots_in(p->substitute(Var::x1, x1).substitute(Var::x2, x2), Var::x3, plan.X3, zero);
        if (!zero) break;
      }
      for (const BigInt& x3 : x3s) {
        const Point pt{x1, x2, x3};
        if (f.eval(pt) != 0 || f1.eval(pt) != 0 || f2.eval(pt) != 0) continue;
        if (!seen.insert(pt).second) continue;
        out.roots.push_back({x1, x2, x3, true});
      }
    }
  }
  std::stable_partition(out.roots.begin(), out.roots.end(), [](const RootCandidate& r) { return r.positive(); });
  out.status = out.roots.empty() ? ExtractStatus::no_root : ExtractStatus::found;
  return out;
}

RecoveredKey recover_factorization(const BigInt& n, const BigInt& e, const RootCandidate& root) {
  RecoveredKey key;
  key.k = gcd(root.x2, root.x3);
  if (key.k == 0) throw SpuriousRoot("x2 = x3 = 0");
  key.a = root.x2 / key.k;
  key.b = root.x3 / key.k;
  if (key.a <= 0 || key.b <= 0) throw SpuriousRoot("a or b is not positive");
  const BigInt num = e * root.x1 - 1;
  const BigInt den = 2 * key.a * key.b * key.k;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw SpuriousRoot("2abk = " + to_decimal(den) + " does not divide e*x1 - 1");
  key.g = num / den;
  key.p = 2 * key.g * key.a + 1;
  key.q = 2 * key.g * key.b + 1;
  if (key.p * key.q != n) throw SpuriousRoot("p*q != N");
  return key;
}

CommonPrimeInstance recovered_instance(const BigInt& n, const BigInt& e, const RootCandidate& root,
                                       const RecoveredKey& key) {
  CommonPrimeInstance inst = instance_from_components(key.g, key.a, key.b, root.x1);
  if (inst.n != n || inst.e != e % inst.lambda()) throw SpuriousRoot("recovered key does not reproduce (N, e)");
  inst.e = e;
  inst.k = key.k;
  return inst;
}

}  // namespace cprsa
