#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rhlab/errors.hpp"
#include "rhlab/rational_poly.hpp"

namespace rhlab {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

inline bool ring_is_zero(const mpq_class& x) { return x == 0; }
inline bool ring_is_zero(const RationalPoly& x) { return x.is_zero(); }

inline mpq_class exact_quotient(const mpq_class& a, const mpq_class& b) {
  return a / b;
}
RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b);

/// Fraction-free (Bareiss) determinant over an integral domain.  Every
/// division is exact, so intermediate entries stay in the ring.
template <class T>
T bareiss_determinant(DenseMatrix<T> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError("matrix must be square");
  }
  if (n == 0) return T(1);
  bool negate = false;
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && ring_is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(cross, previous);
      }
      m[i][k] = T(0);
    }
    previous = m[k][k];
  }
  T det = std::move(m[n - 1][n - 1]);
  return negate ? T(-det) : det;
}

/// Sylvester matrix of p and q with respect to `var`: deg_q rows of shifted
/// p coefficients followed by deg_p rows of shifted q coefficients.
DenseMatrix<RationalPoly> sylvester_matrix(const RationalPoly& p,
                                           const RationalPoly& q, Variable var);

/// Res_var(p, q) as the Bareiss determinant of the Sylvester matrix.
/// Throws PreconditionError when either input has degree 0 in `var`.
RationalPoly sylvester_resultant(const RationalPoly& p, const RationalPoly& q,
                                 Variable var);

}  // namespace rhlab
