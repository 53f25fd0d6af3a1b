#include "rhlab/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rhlab/errors.hpp"

namespace rhlab {

SpaceFormParams::SpaceFormParams(int n, double c) : n_(n), c_(c) {
  if (n < 2) {
    throw PreconditionError("complex dimension must be at least 2, got " +
                            std::to_string(n));
  }
  if (c == 0.0 || !std::isfinite(c)) {
    throw PreconditionError("curvature constant c must be finite and nonzero");
  }
}

AdaptedFrame AdaptedFrame::standard(int n) {
  if (n < 2) {
    throw PreconditionError("adapted frame needs n >= 2");
  }
  const int dim = 2 * n - 1;
  Matrix phi = Matrix::Zero(dim, dim);
  // Pairs (e_k, phi e_k) occupy indices (2k-1, 2k): phi e = e', phi e' = -e.
  for (int k = 1; k < dim; k += 2) {
    phi(k + 1, k) = 1.0;
    phi(k, k + 1) = -1.0;
  }
  return AdaptedFrame(std::move(phi));
}

Vector AdaptedFrame::basis_vector(int i) const {
  if (i < 0 || i >= dim()) {
    throw PreconditionError("frame index out of range");
  }
  return Vector::Unit(dim(), i);
}

ShapeState::ShapeState(AdaptedFrame frame, Matrix a)
    : frame_(std::move(frame)), a_(std::move(a)) {
  if (a_.rows() != frame_.dim() || a_.cols() != frame_.dim()) {
    throw PreconditionError("shape operator dimension does not match frame");
  }
  if (a_ != a_.transpose()) {
    throw PreconditionError("shape operator matrix must be exactly symmetric");
  }
}

ShapeState ShapeState::from_upper(AdaptedFrame frame, const Matrix& upper) {
  Matrix a = upper.triangularView<Eigen::Upper>();
  a.triangularView<Eigen::StrictlyLower>() = a.transpose();
  return ShapeState(std::move(frame), std::move(a));
}

ShapeState ShapeState::diagonal(const Vector& entries) {
  const auto dim = static_cast<int>(entries.size());
  if (dim < 3 || dim % 2 == 0) {
    throw PreconditionError("tangent dimension must be odd and at least 3");
  }
  return ShapeState(AdaptedFrame::standard((dim + 1) / 2),
                    entries.asDiagonal().toDenseMatrix());
}

void require_unit(const Vector& x, int dim) {
  if (x.size() != dim) {
    throw PreconditionError("direction has dimension " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(dim));
  }
  if (std::abs(x.norm() - 1.0) > kUnitTolerance) {
    throw PreconditionError("direction must be a unit vector");
  }
}

namespace {

void require_compatible(const ShapeState& state, const SpaceFormParams& sf) {
  if (state.dim() != sf.tangent_dim()) {
    throw PreconditionError("shape state dimension does not match 2n-1");
  }
}

}  // namespace

double phi_norm_sq(const AdaptedFrame& frame, const Vector& x) {
  return (frame.phi() * x).squaredNorm();
}

double ricci_direct(const ShapeState& state, const SpaceFormParams& sf,
                    const Vector& x) {
  require_compatible(state, sf);
  require_unit(x, state.dim());
  const Vector ax = state.a() * x;
  const double ambient =
      sf.c() * (2.0 * sf.n() - 2.0 + 3.0 * phi_norm_sq(state.frame(), x));
  return ambient + state.a().trace() * x.dot(ax) - ax.squaredNorm();
}

Vector gauss_curvature(const ShapeState& state, const SpaceFormParams& sf,
                       const Vector& x, const Vector& y, const Vector& z) {
  const Matrix& a = state.a();
  const Matrix& phi = state.frame().phi();
  const Vector phix = phi * x;
  const Vector phiy = phi * y;
  const Vector phiz = phi * z;
  const Vector ax = a * x;
  const Vector ay = a * y;

  Vector ambient = y.dot(z) * x - x.dot(z) * y + phiy.dot(z) * phix -
                   phix.dot(z) * phiy - 2.0 * phix.dot(y) * phiz;
  return sf.c() * ambient + ay.dot(z) * ax - ax.dot(z) * ay;
}

double ricci_tensor_sum(const ShapeState& state, const SpaceFormParams& sf,
                        const Vector& x) {
  require_compatible(state, sf);
  require_unit(x, state.dim());
  double sum = 0.0;
  for (int i = 0; i < state.dim(); ++i) {
    const Vector ei = state.frame().basis_vector(i);
    sum += gauss_curvature(state, sf, ei, x, x).dot(ei);
  }
  return sum;
}

double normal_curvature(const ShapeState& state, const Vector& x) {
  require_unit(x, state.dim());
  return x.dot(state.a() * x);
}

double mean_curvature_norm(const ShapeState& state) {
  return std::abs(state.a().trace()) / static_cast<double>(state.dim());
}

CurvatureReport curvature_report(const ShapeState& state,
                                 const SpaceFormParams& sf, const Vector& x) {
  return CurvatureReport{
      .ric = ricci_direct(state, sf, x),
      .kappa = normal_curvature(state, x),
      .mean_norm = mean_curvature_norm(state),
      .phi_norm_sq = phi_norm_sq(state.frame(), x),
  };
}

std::optional<double> is_hopf(const ShapeState& state, double tol) {
  if (!(tol > 0.0)) {
    throw PreconditionError("tolerance must be positive");
  }
  const int xi = state.frame().xi_index();
  const Vector axi = state.a().col(xi);
  const double delta = axi(xi);
  Vector rest = axi;
  rest(xi) = 0.0;
  if (rest.norm() <= tol) {
    return delta;
  }
  return std::nullopt;
}

double hopf_relation_residual(double delta, double lambda1, double lambda2,
                              double c) {
  return 2.0 * lambda1 * lambda2 - (lambda1 + lambda2) * delta - 2.0 * c;
}

SymmetricEigen jacobi_eigen(const Matrix& m, double threshold) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("jacobi_eigen needs a square matrix");
  }
  const auto n = static_cast<int>(m.rows());
  Matrix a = m;
  Matrix v = Matrix::Identity(n, n);
  constexpr int kMaxSweeps = 100;
  int sweep = 0;

  auto max_off = [&] {
    double worst = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        worst = std::max(worst, std::abs(a(p, q)));
      }
    }
    return worst;
  };

  while (max_off() > threshold && sweep < kMaxSweeps) {
    ++sweep;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = cs * akp - sn * akq;
          a(k, q) = sn * akp + cs * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = cs * apk - sn * aqk;
          a(q, k) = sn * apk + cs * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = cs * vkp - sn * vkq;
          v(k, q) = sn * vkp + cs * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace rhlab
