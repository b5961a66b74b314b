#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cprsa/polynomial.hpp"

namespace cprsa {

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UnivariatePolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UnivariatePolynomial(std::move(d));
}

BigInt UnivariatePolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

UnivariatePolynomial UnivariatePolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = cprsa::divide_exact(coeffs_[i], g);
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial pseudo_remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  int pending = a.degree() - db + 1;
  std::vector<BigInt> r = a.coefficients();
  const BigInt& lc = b.leading();
  const auto& bc = b.coefficients();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    BigInt lr = r.back();
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    --pending;
  }
  if (pending > 0) {
    BigInt scale = pow(lc, static_cast<unsigned long>(pending));
    for (auto& c : r) c *= scale;
  }
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt c = cprsa::divide_exact(r[k + db], bc.back());
    q[k] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * bc[j];
  }
  for (const auto& c : r) {
    if (c != 0) throw std::domain_error("inexact polynomial division");
  }
  return UnivariatePolynomial(std::move(q));
}

std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& h) {
  std::vector<UnivariatePolynomial> chain;
  if (h.is_zero()) return chain;
  chain.push_back(h);
  UnivariatePolynomial d = h.derivative();
  if (d.is_zero()) return chain;
  // Positive scaling only: primitive_part would flip the sign of h' when
  // the leading coefficient is negative.
  std::vector<BigInt> dc = d.coefficients();
  const BigInt dg = d.content();
  for (auto& c : dc) c = cprsa::divide_exact(c, dg);
  chain.emplace_back(std::move(dc));
  while (chain.back().degree() > 0) {
    const auto& prev = chain[chain.size() - 2];
    const auto& cur = chain.back();
    UnivariatePolynomial r = pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    // prem = lc^k * rem; we need a positive multiple of -rem.
    const int k = prev.degree() - cur.degree() + 1;
    const bool scale_negative = cur.leading() < 0 && (k % 2 == 1);
    std::vector<BigInt> next = r.coefficients();
    BigInt g = r.content();
    for (auto& c : next) {
      c = cprsa::divide_exact(c, g);
      if (!scale_negative) c = -c;
    }
    chain.emplace_back(std::move(next));
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<UnivariatePolynomial>& chain, const BigInt& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

std::vector<BigInt> univariate_integer_roots(const UnivariatePolynomial& h, const BigInt& bound) {
  if (h.is_zero()) throw std::invalid_argument("integer roots of the zero polynomial");
  if (bound < 1) throw std::invalid_argument("root bound must be at least 1");
  std::vector<BigInt> roots;
  if (h.degree() == 0) return roots;

  auto chain = sturm_sequence(h);
  UnivariatePolynomial squarefree = h;
  if (chain.back().degree() > 0) {
    squarefree = divide_exact(h, chain.back().primitive_part());
    chain = sturm_sequence(squarefree);
  }

  // Cauchy bound: every root satisfies |r| <= 1 + max|c_i| / |lc|.
  BigInt largest = 0;
  for (const auto& c : squarefree.coefficients()) largest = std::max(largest, BigInt(abs(c)));
  BigInt lc = abs(squarefree.leading());
  BigInt cauchy = 1 + (largest + lc - 1) / lc;
  const BigInt limit = std::min(bound, cauchy);

  struct Interval {
    BigInt lo, hi;
    int vlo, vhi;
  };
  BigInt lo = -limit - 1;
  std::vector<Interval> stack{{lo, limit, sign_variations(chain, lo), sign_variations(chain, limit)}};
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.vlo - iv.vhi <= 0) continue;
    if (iv.hi - iv.lo == 1) {
      if (h.eval(iv.hi) == 0) roots.push_back(iv.hi);
      continue;
    }
    BigInt span = iv.hi - iv.lo;
    BigInt mid = iv.lo + span / 2;
    int vmid = sign_variations(chain, mid);
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cprsa
