#pragma once

#include <string_view>
#include <vector>

#include "rhlab/geom_core.hpp"

namespace rhlab {

/// Scalar frame functions of a 2-Hopf hypersurface along an integral curve
/// of phi X:  A xi = alpha xi + beta X,  A X = gamma X + beta xi,
/// A phi X = mu phi X.
struct TwoHopfState {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double mu = 0.0;
  double s = 0.0;

  /// State with alpha held constant, which forces mu = (alpha + gamma) / 3.
  static TwoHopfState constant_alpha(double alpha, double beta, double gamma,
                                     double s = 0.0);

  /// Shape operator in the frame (xi, X, phi X).
  ShapeState shape() const;
};

struct StateDerivative {
  double dalpha = 0.0;
  double dbeta = 0.0;
  double dgamma = 0.0;
};

/// Connection functions chi1, chi2 recovered from a state and its
/// derivatives along phi X.
struct FrameScalars {
  double chi1 = 0.0;
  double chi2 = 0.0;
  double e3_beta = 0.0;
  double e3_gamma = 0.0;
  double e3_mu = 0.0;
};

/// Residuals of the Codazzi components cd2, cd6 and the Gauss scalar ga1.
struct CodazziResiduals {
  double cd2 = 0.0;
  double cd6 = 0.0;
  double ga1 = 0.0;
};

enum class StopReason { completed, beta_floor, overflow };
std::string_view stop_reason_name(StopReason reason);

struct TrajectorySample {
  TwoHopfState state;
  double chi1 = 0.0;
  double chi2 = 0.0;
  CodazziResiduals residuals;
};

struct ResidualSummary {
  double max_cd2 = 0.0;
  double max_cd6 = 0.0;
  double max_ga1 = 0.0;
  double max_constraint = 0.0;  // |alpha + gamma - 3 mu|
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  StopReason stop = StopReason::completed;
  ResidualSummary residual_summary;
};

/// Which branch of the stationarity equation a state lies on.
enum class StationaryBranch {
  ruled_minimal,  // gamma = mu = 0
  tan_profile,    // 2 gamma + mu = 0, mu != 0
  generic,        // 2 gamma + mu != 0
};
std::string_view branch_name(StationaryBranch branch);

struct TwoHopfOptions {
  double beta_floor = 1e-8;
  double overflow_guard = 1e8;
};

/// The 2-Hopf structure system
///   d alpha/ds = beta (alpha + gamma - 3 mu)
///   d beta/ds  = beta^2 + gamma^2 + mu (alpha - 2 gamma) + c
///   d gamma/ds = (gamma - mu)(gamma^2 - alpha gamma - c)/beta
///                + beta (2 gamma + mu)
/// integrated in constant-alpha mode, where mu = (alpha + gamma)/3 closes it.
class TwoHopfSystem {
 public:
  explicit TwoHopfSystem(double c, TwoHopfOptions options = {});

  double c() const { return c_; }
  const TwoHopfOptions& options() const { return options_; }

  /// Right-hand sides as printed.  Throws SingularityError when
  /// |beta| < beta_floor.
  StateDerivative rhs(const TwoHopfState& state) const;

  /// (gamma - mu)(2 gamma^2 - 3 gamma mu - c) + beta^2 (2 gamma + mu).
  double stationarity_residual(const TwoHopfState& state) const;

  StationaryBranch branch(const TwoHopfState& state,
                          double tol = kDefaultTolerance) const;

  /// chi2 from cd8 and chi1 from cd3, using derivatives from `rhs`.
  FrameScalars frame_scalars(const TwoHopfState& state) const;

  /// Residuals of cd2, cd6, ga1 given frame scalars and d chi1 / ds.
  CodazziResiduals codazzi_residuals(const TwoHopfState& state,
                                     const FrameScalars& scalars,
                                     double e3_chi1) const;

  /// Fixed-step RK4 over [s0, s1] in constant-alpha mode.  Stops early
  /// (flagged in the result) when beta reaches the floor or changes sign,
  /// or when the state exceeds the overflow guard.
  Trajectory integrate(const TwoHopfState& initial, double s0, double s1,
                       double step = 1e-3) const;

 private:
  double c_;
  TwoHopfOptions options_;
};

}  // namespace rhlab
