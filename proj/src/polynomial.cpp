#include "cprsa/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cprsa {

namespace {

unsigned index(Var v) { return static_cast<unsigned>(v); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

TrivariatePolynomial::TrivariatePolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0, 0}, constant);
}

TrivariatePolynomial TrivariatePolynomial::term(const Monomial& m, const BigInt& coeff) {
  TrivariatePolynomial p;
  p.add_term(m, coeff);
  return p;
}

TrivariatePolynomial TrivariatePolynomial::variable(Var v) {
  Monomial m{0, 0, 0};
  m[index(v)] = 1;
  return term(m, 1);
}

bool TrivariatePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

BigInt TrivariatePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TrivariatePolynomial::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned TrivariatePolynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index(v)]);
  return d;
}

unsigned TrivariatePolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

BigInt TrivariatePolynomial::eval(const Point& point) const {
  // Powers are cached per variable; the polynomials here are sparse but
  // reuse the same low exponents many times.
  std::array<std::vector<BigInt>, 3> powers;
  for (unsigned v = 0; v < 3; ++v) {
    unsigned deg = degree(static_cast<Var>(v));
    powers[v].reserve(deg + 1);
    powers[v].push_back(1);
    for (unsigned i = 1; i <= deg; ++i) powers[v].push_back(powers[v].back() * point[v]);
  }
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c * powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]];
  return sum;
}

TrivariatePolynomial TrivariatePolynomial::substitute(Var v, const BigInt& value) const {
  const unsigned vi = index(v);
  std::vector<BigInt> powers{1};
  for (unsigned i = 1; i <= degree(v); ++i) powers.push_back(powers.back() * value);
  TrivariatePolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced[vi] = 0;
    out.add_term(reduced, c * powers[m[vi]]);
  }
  return out;
}

std::vector<TrivariatePolynomial> TrivariatePolynomial::coefficients_in(Var v) const {
  const unsigned vi = index(v);
  std::vector<TrivariatePolynomial> out(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced[vi] = 0;
    out[m[vi]].add_term(reduced, c);
  }
  return out;
}

UnivariatePolynomial TrivariatePolynomial::to_univariate(Var v) const {
  const unsigned vi = index(v);
  std::vector<BigInt> coeffs(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    for (unsigned other = 0; other < 3; ++other) {
      if (other != vi && m[other] != 0)
        throw std::invalid_argument("polynomial is not univariate in the requested variable");
    }
    coeffs[m[vi]] = c;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

TrivariatePolynomial TrivariatePolynomial::scale_vars(const BigInt& X1, const BigInt& X2, const BigInt& X3) const {
  TrivariatePolynomial out;
  for (const auto& [m, c] : terms_)
    out.terms_.emplace(m, c * pow(X1, m[0]) * pow(X2, m[1]) * pow(X3, m[2]));
  return out;
}

TrivariatePolynomial TrivariatePolynomial::multiply_monomial(const Monomial& shift) const {
  TrivariatePolynomial out;
  for (const auto& [m, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m[0] + shift[0], m[1] + shift[1], m[2] + shift[2]}, c);
  return out;
}

std::string TrivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*x1^" << m[0] << "*x2^" << m[1] << "*x3^" << m[2];
  }
  return out.str();
}

TrivariatePolynomial TrivariatePolynomial::parse(std::string_view text) {
  text = trim(text);
  TrivariatePolynomial out;
  if (text == "0") return out;
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view chunk = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    Monomial m{0, 0, 0};
    std::size_t star = chunk.find('*');
    BigInt coeff = from_decimal(chunk.substr(0, star));
    while (star != std::string_view::npos) {
      std::size_t after = star + 1;
      star = chunk.find('*', after);
      std::string_view factor = chunk.substr(after, star == std::string_view::npos ? std::string_view::npos : star - after);
      if (factor.size() < 2 || factor[0] != 'x' || factor[1] < '1' || factor[1] > '3')
        throw std::invalid_argument("bad polynomial factor: " + std::string(factor));
      unsigned var = static_cast<unsigned>(factor[1] - '1');
      unsigned exponent = 1;
      if (factor.size() > 2) {
        if (factor[2] != '^') throw std::invalid_argument("bad polynomial factor: " + std::string(factor));
        exponent = static_cast<unsigned>(std::stoul(std::string(factor.substr(3))));
      }
      m[var] += exponent;
    }
    out.add_term(m, coeff);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return out;
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator-=(const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  TrivariatePolynomial out;
  BigInt product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(product.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(Monomial{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, product);
    }
  }
  return out;
}

TrivariatePolynomial TrivariatePolynomial::operator-() const {
  TrivariatePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BigInt norm2_sq(const TrivariatePolynomial& f) {
  BigInt sum = 0;
  for (const auto& [m, c] : f.terms()) sum += c * c;
  return sum;
}

BigInt max_abs_coefficient(const TrivariatePolynomial& f) {
  BigInt best = 0;
  for (const auto& [m, c] : f.terms()) {
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  }
  return best;
}

TrivariatePolynomial divide_exact(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  TrivariatePolynomial quotient;
  TrivariatePolynomial rest = a;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    if (m[0] < lead_m[0] || m[1] < lead_m[1] || m[2] < lead_m[2])
      throw std::domain_error("inexact polynomial division");
    Monomial shift{m[0] - lead_m[0], m[1] - lead_m[1], m[2] - lead_m[2]};
    BigInt q = divide_exact(c, lead_c);
    TrivariatePolynomial step = b.multiply_monomial(shift);
    step *= q;
    quotient.add_term(shift, q);
    rest -= step;
  }
  return quotient;
}

}  // namespace cprsa
