#pragma once

#include <optional>

#include <Eigen/Dense>

namespace rhlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default absolute tolerance for geometric predicates.
inline constexpr double kDefaultTolerance = 1e-9;

/// Tolerance used to decide whether a direction is a unit vector.
inline constexpr double kUnitTolerance = 1e-12;

/// Ambient complex space form of complex dimension n and holomorphic
/// sectional curvature 4c.  Only the non-flat case c != 0 is representable.
class SpaceFormParams {
 public:
  SpaceFormParams(int n, double c);

  int n() const { return n_; }
  double c() const { return c_; }
  int tangent_dim() const { return 2 * n_ - 1; }
  bool projective() const { return c_ > 0.0; }

 private:
  int n_;
  double c_;
};

/// Orthonormal frame (xi, e2, phi e2, ..., en, phi en) of a real hypersurface,
/// carrying the matrix of phi in that frame.  xi is always index 0.
class AdaptedFrame {
 public:
  static AdaptedFrame standard(int n);

  int dim() const { return static_cast<int>(phi_.rows()); }
  int n() const { return (dim() + 1) / 2; }
  int xi_index() const { return 0; }
  const Matrix& phi() const { return phi_; }
  Vector basis_vector(int i) const;

 private:
  explicit AdaptedFrame(Matrix phi) : phi_(std::move(phi)) {}
  Matrix phi_;
};

/// Shape operator A in an adapted frame.  The matrix must be exactly
/// symmetric; use `from_upper` to build one from its upper triangle.
class ShapeState {
 public:
  ShapeState(AdaptedFrame frame, Matrix a);

  static ShapeState from_upper(AdaptedFrame frame, const Matrix& upper);
  static ShapeState diagonal(const Vector& entries);

  const AdaptedFrame& frame() const { return frame_; }
  const Matrix& a() const { return a_; }
  int dim() const { return frame_.dim(); }

 private:
  AdaptedFrame frame_;
  Matrix a_;
};

struct CurvatureReport {
  double ric = 0.0;
  double kappa = 0.0;
  double mean_norm = 0.0;
  double phi_norm_sq = 0.0;
};

/// Ric(x) from the contracted Gauss equation:
/// c (2n - 2 + 3 |phi x|^2) + Tr(A) <Ax, x> - |Ax|^2.
double ricci_direct(const ShapeState& state, const SpaceFormParams& sf,
                    const Vector& x);

/// Ric(x) as sum_i <R(e_i, x) x, e_i>, with R evaluated term by term from
/// the Gauss equation.  Independent of `ricci_direct`.
double ricci_tensor_sum(const ShapeState& state, const SpaceFormParams& sf,
                        const Vector& x);

/// R(X, Y) Z of the hypersurface from the Gauss equation.
Vector gauss_curvature(const ShapeState& state, const SpaceFormParams& sf,
                       const Vector& x, const Vector& y, const Vector& z);

double normal_curvature(const ShapeState& state, const Vector& x);
double mean_curvature_norm(const ShapeState& state);
double phi_norm_sq(const AdaptedFrame& frame, const Vector& x);

CurvatureReport curvature_report(const ShapeState& state,
                                 const SpaceFormParams& sf, const Vector& x);

/// Returns <A xi, xi> when A xi is parallel to xi within `tol`.
std::optional<double> is_hopf(const ShapeState& state,
                              double tol = kDefaultTolerance);

/// 2 l1 l2 - (l1 + l2) delta - 2c; vanishes for the phi-paired principal
/// curvatures of any Hopf hypersurface.
double hopf_relation_residual(double delta, double lambda1, double lambda2,
                              double c);

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // columns
  int sweeps = 0;
};

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix.  Iterates until
/// every off-diagonal entry is below `threshold`.
SymmetricEigen jacobi_eigen(const Matrix& m, double threshold = 1e-13);

/// Throws PreconditionError unless |x| = 1 within kUnitTolerance and x has
/// dimension `dim`.
void require_unit(const Vector& x, int dim);

}  // namespace rhlab
