#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace cprsa {

/// Fraction-free Gaussian elimination determinant over an integral domain.
/// `is_zero(x)` tests for zero, `div_exact(a, b)` returns a / b and is only
/// called when the division is known to be exact.
template <class T, class IsZero, class DivExact>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, IsZero is_zero, DivExact div_exact) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return T{};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = div_exact(cross, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

}  // namespace cprsa
