#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cprsa/bigint.hpp"

namespace cprsa {

/// Exponent triple (i1, i2, i3) of x1^i1 * x2^i2 * x3^i3.
using Monomial = std::array<unsigned, 3>;
using Point = std::array<BigInt, 3>;

enum class Var : unsigned { x1 = 0, x2 = 1, x3 = 2 };

class UnivariatePolynomial;

/// Sparse integer polynomial in x1, x2, x3. Terms are kept in a map ordered
/// lexicographically by exponent triple; zero coefficients are never stored.
class TrivariatePolynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  TrivariatePolynomial() = default;
  explicit TrivariatePolynomial(const BigInt& constant);

  static TrivariatePolynomial term(const Monomial& m, const BigInt& coeff = 1);
  static TrivariatePolynomial variable(Var v);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  BigInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const BigInt& coeff);

  /// Highest power of `v`; 0 for constants and for the zero polynomial.
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool contains(Var v) const { return degree(v) > 0; }

  BigInt eval(const Point& point) const;
  /// f with `v` replaced by `value`; the result no longer contains `v`.
  TrivariatePolynomial substitute(Var v, const BigInt& value) const;
  /// Coefficients c_0..c_deg with f = sum c_j v^j; each c_j is free of `v`.
  std::vector<TrivariatePolynomial> coefficients_in(Var v) const;
  /// Requires every other variable to be absent.
  UnivariatePolynomial to_univariate(Var v) const;

  /// f(x1*X1, x2*X2, x3*X3).
  TrivariatePolynomial scale_vars(const BigInt& X1, const BigInt& X2, const BigInt& X3) const;
  TrivariatePolynomial multiply_monomial(const Monomial& m) const;

  /// Canonical text: "c*x1^a*x2^b*x3^c" terms joined by " + ", ascending
  /// exponent order; the zero polynomial is "0".
  std::string to_string() const;
  static TrivariatePolynomial parse(std::string_view text);

  TrivariatePolynomial& operator+=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator-=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator*=(const BigInt& scalar);

  friend TrivariatePolynomial operator+(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a += b; }
  friend TrivariatePolynomial operator-(TrivariatePolynomial a, const TrivariatePolynomial& b) { return a -= b; }
  friend TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b);
  friend TrivariatePolynomial operator*(TrivariatePolynomial a, const BigInt& s) { return a *= s; }
  friend TrivariatePolynomial operator*(const BigInt& s, TrivariatePolynomial a) { return a *= s; }
  TrivariatePolynomial operator-() const;

  friend bool operator==(const TrivariatePolynomial& a, const TrivariatePolynomial& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& out, const TrivariatePolynomial& p) { return out << p.to_string(); }

 private:
  TermMap terms_;
};

/// Sum of squared coefficients (the squared Euclidean norm).
BigInt norm2_sq(const TrivariatePolynomial& f);
BigInt max_abs_coefficient(const TrivariatePolynomial& f);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
TrivariatePolynomial divide_exact(const TrivariatePolynomial& a, const TrivariatePolynomial& b);

/// Dense univariate integer polynomial, coefficient i multiplies x^i.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const;
  UnivariatePolynomial derivative() const;
  BigInt content() const;
  UnivariatePolynomial primitive_part() const;

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b.
UnivariatePolynomial pseudo_remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Sturm chain h, h', -rem, ... with every member scaled only by positive
/// constants (sign information is preserved).
std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& h);

/// Every integer r with |r| <= bound and h(r) == 0, ascending, each verified
/// by exact evaluation. Real roots are isolated with Sturm sign-variation
/// counts on integer intervals of the squarefree part of h.
std::vector<BigInt> univariate_integer_roots(const UnivariatePolynomial& h, const BigInt& bound);

/// Res_v(f, g) as the determinant of the Sylvester matrix with f's
/// coefficient rows on top. Throws std::invalid_argument when either input
/// has degree 0 in `v`.
TrivariatePolynomial resultant(const TrivariatePolynomial& f, const TrivariatePolynomial& g, Var v);

}  // namespace cprsa
