#include "rhlab/ricci_bound.hpp"

#include <cmath>

namespace rhlab {

Matrix completed_frame(const Vector& x) {
  const auto dim = static_cast<int>(x.size());
  require_unit(x, dim);
  Matrix q(dim, dim);
  int filled = 0;
  for (int i = 0; i < dim && filled < dim - 1; ++i) {
    Vector v = Vector::Unit(dim, i);
    // Two passes of classical Gram-Schmidt keep the basis orthonormal to
    // rounding level.
    for (int pass = 0; pass < 2; ++pass) {
      v -= x.dot(v) * x;
      for (int j = 0; j < filled; ++j) {
        v -= q.col(j).dot(v) * q.col(j);
      }
    }
    const double norm = v.norm();
    if (norm < 1e-8) {
      continue;
    }
    q.col(filled++) = v / norm;
  }
  q.col(dim - 1) = x;
  return q;
}

namespace {

struct RotatedView {
  double mu;
  double trace_b;
  double off_column_norm;
  Matrix b;
};

RotatedView rotate_into(const ShapeState& state, const Vector& x) {
  const Matrix q = completed_frame(x);
  const Matrix rotated = q.transpose() * state.a() * q;
  const int last = state.dim() - 1;
  RotatedView view;
  view.mu = rotated(last, last);
  view.b = rotated.topLeftCorner(last, last);
  view.trace_b = view.b.trace();
  view.off_column_norm = rotated.col(last).head(last).norm();
  return view;
}

}  // namespace

std::optional<EqualityBlock> equality_structure(const ShapeState& state,
                                                const Vector& x, double tol) {
  const RotatedView view = rotate_into(state, x);
  if (view.off_column_norm <= tol &&
      std::abs(view.trace_b - 3.0 * view.mu) <= tol) {
    return EqualityBlock{view.mu, view.b};
  }
  return std::nullopt;
}

double ricci_bound_value(const ShapeState& state, const SpaceFormParams& sf,
                         const Vector& x) {
  const CurvatureReport cr = curvature_report(state, sf, x);
  const double m = state.dim();
  return m * m / 8.0 * cr.mean_norm * cr.mean_norm + cr.kappa * cr.kappa +
         sf.c() * (2.0 * sf.n() - 2.0 + 3.0 * cr.phi_norm_sq);
}

BoundReport ricci_upper_bound(const ShapeState& state,
                              const SpaceFormParams& sf, const Vector& x,
                              double tol) {
  BoundReport report;
  report.ric = ricci_direct(state, sf, x);
  report.bound = ricci_bound_value(state, sf, x);
  report.gap = report.bound - report.ric;
  const RotatedView view = rotate_into(state, x);
  report.mu = view.mu;
  report.trace_b = view.trace_b;
  report.equality = view.off_column_norm <= tol &&
                    std::abs(view.trace_b - 3.0 * view.mu) <= tol;
  return report;
}

}  // namespace rhlab
