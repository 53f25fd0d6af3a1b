#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "rhlab/errors.hpp"
#include "rhlab/geom_core.hpp"

namespace rhlab {

/// f(x_1, ..., x_m) = x_m (x_1 + ... + x_{m-1}) - x_m^2 for m = 2n - 1 >= 3.
/// Generic over the scalar so the identity can be checked exactly.
template <class Scalar>
Scalar lemma_f(std::span<const Scalar> xs) {
  if (xs.size() < 3 || xs.size() % 2 == 0) {
    throw PreconditionError("lemma_f needs an odd number (>= 3) of entries");
  }
  const Scalar& last = xs.back();
  Scalar rest = Scalar(0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    rest += xs[i];
  }
  return Scalar(last * rest - last * last);
}

/// (x_1 + ... + x_m)^2 / 8, the upper bound for lemma_f.
template <class Scalar>
Scalar lemma_f_bound(std::span<const Scalar> xs) {
  Scalar total = Scalar(0);
  for (const Scalar& x : xs) total += x;
  return Scalar(total * total / Scalar(8));
}

/// (S - 3m)^2 / 8, the closed form of bound - f.
template <class Scalar>
Scalar lemma_f_gap(std::span<const Scalar> xs) {
  if (xs.empty()) {
    throw PreconditionError("lemma_f_gap needs a non-empty tuple");
  }
  Scalar rest = Scalar(0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) rest += xs[i];
  const Scalar d = rest - Scalar(3) * xs.back();
  return Scalar(d * d / Scalar(8));
}

struct BoundReport {
  double ric = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  bool equality = false;
  double mu = 0.0;       // <Ax, x>
  double trace_b = 0.0;  // trace of A restricted to x^perp
};

struct EqualityBlock {
  double mu = 0.0;
  Matrix b;  // (2n-2) x (2n-2) block of A on x^perp in the completed frame
};

/// Orthonormal basis (as columns) whose last column is x; the other columns
/// come from Gram-Schmidt over the existing frame vectors in order.
Matrix completed_frame(const Vector& x);

/// Equality block of A in direction x, present when A x = mu x and
/// Tr B = 3 mu, both within `tol`.
std::optional<EqualityBlock> equality_structure(const ShapeState& state,
                                                const Vector& x,
                                                double tol = kDefaultTolerance);

/// Ric(x) <= (2n-1)^2/8 |H|^2 + kappa_x^2 + c (2n - 2 + 3 |phi x|^2).
BoundReport ricci_upper_bound(const ShapeState& state,
                              const SpaceFormParams& sf, const Vector& x,
                              double tol = kDefaultTolerance);

/// Right-hand side of the bound alone.
double ricci_bound_value(const ShapeState& state, const SpaceFormParams& sf,
                         const Vector& x);

}  // namespace rhlab
