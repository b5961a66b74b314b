#include <stdexcept>

#include "cprsa/bareiss.hpp"
#include "cprsa/polynomial.hpp"

namespace cprsa {

TrivariatePolynomial resultant(const TrivariatePolynomial& f, const TrivariatePolynomial& g, Var v) {
  const unsigned m = f.degree(v);
  const unsigned n = g.degree(v);
  if (m == 0 || n == 0)
    throw std::invalid_argument("resultant needs both polynomials to have positive degree in the variable");
  const auto fc = f.coefficients_in(v);
  const auto gc = g.coefficients_in(v);
  const unsigned size = m + n;
  std::vector<std::vector<TrivariatePolynomial>> sylvester(size, std::vector<TrivariatePolynomial>(size));
  for (unsigned row = 0; row < n; ++row)
    for (unsigned j = 0; j <= m; ++j) sylvester[row][row + j] = fc[m - j];
  for (unsigned row = 0; row < m; ++row)
    for (unsigned j = 0; j <= n; ++j) sylvester[n + row][row + j] = gc[n - j];
  return bareiss_determinant(
      std::move(sylvester), TrivariatePolynomial(BigInt(1)),
      [](const TrivariatePolynomial& p) { return p.is_zero(); },
      [](const TrivariatePolynomial& a, const TrivariatePolynomial& b) { return divide_exact(a, b); });
}

}  // namespace cprsa
