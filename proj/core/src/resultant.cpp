#include "rhlab/resultant.hpp"

namespace rhlab {

RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) {
    throw PreconditionError("Bareiss step produced an inexact division");
  }
  return std::move(*q);
}

DenseMatrix<RationalPoly> sylvester_matrix(const RationalPoly& p,
                                           const RationalPoly& q, Variable var) {
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m < 1 || n < 1) {
    throw PreconditionError("resultant needs positive degree in " + var.name());
  }
  const auto pc = p.coefficients(var);
  const auto qc = q.coefficients(var);
  const auto size = static_cast<std::size_t>(m + n);
  DenseMatrix<RationalPoly> s(size, std::vector<RationalPoly>(size));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) {
      s[row][row + k] = pc[m - k];
    }
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) {
      s[n + row][row + k] = qc[n - k];
    }
  }
  return s;
}

RationalPoly sylvester_resultant(const RationalPoly& p, const RationalPoly& q,
                                 Variable var) {
  return bareiss_determinant(sylvester_matrix(p, q, var));
}

}  // namespace rhlab
