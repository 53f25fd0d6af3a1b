#include <doctest.h>

#include <cmath>
#include <random>

#include "rhlab/errors.hpp"
#include "rhlab/model_catalog.hpp"
#include "rhlab/ricci_bound.hpp"
#include "rhlab/twohopf_ode.hpp"

using namespace rhlab;

namespace {

TwoHopfState lohnherr(double u, double c = -1.0) {
  const Matrix a = shape_state({Family::LohnherrEquidistant, u, 0, c}).a();
  return {a(0, 0), a(0, 1), a(1, 1), a(2, 2), 0.0};
}

const double kK = std::sqrt(27.0);  // tan-profile rate at c = 8

TwoHopfState tan_start(double s0) {
  return TwoHopfState::constant_alpha(-7.0, kK * std::tan(kK * s0), 1.0, s0);
}

double max_tan_error(double step, double s1 = 0.28) {
  const Trajectory t = TwoHopfSystem(8).integrate(tan_start(0.05), 0.05, s1, step);
  REQUIRE(t.stop == StopReason::completed);
  double worst = 0;
  for (const auto& s : t.samples)
    worst = std::max(worst, std::abs(s.state.beta - kK * std::tan(kK * s.state.s)));
  return worst;
}

}  // namespace

TEST_CASE("rhs examples") {
  const TwoHopfSystem sys(-1);
  const StateDerivative d = sys.rhs(lohnherr(0.5));
  CHECK(std::abs(d.dalpha) < 1e-15);
  CHECK(std::abs(d.dbeta) < 1e-15);
  CHECK(std::abs(d.dgamma) < 1e-15);

  const TwoHopfState tp = tan_start(0.01);
  const StateDerivative dt = TwoHopfSystem(8).rhs(tp);
  CHECK(std::abs(dt.dbeta - (tp.beta * tp.beta + 27)) < 1e-9);

  const TwoHopfState s = TwoHopfState::constant_alpha(2 * 0.7, 1.0, 0.7);
  CHECK(s.mu == doctest::Approx(0.7));
  CHECK(TwoHopfSystem(1).rhs(s).dgamma == doctest::Approx(3 * 0.7));

  CHECK_THROWS_AS(sys.rhs(TwoHopfState{1, 1e-9, 0, 0, 0}), SingularityError);
}

TEST_CASE("lohnherr points are fixed points") {
  const TwoHopfSystem sys(-1);
  for (int i = 0; i < 50; ++i) {
    const double u = -0.99 + 1.98 * i / 49.0;
    const StateDerivative d = sys.rhs(lohnherr(u));
    CHECK(std::abs(d.dbeta) < 1e-12);
    CHECK(std::abs(d.dgamma) < 1e-12);
    CHECK(std::abs(sys.stationarity_residual(lohnherr(u))) < 1e-12);
  }
}

TEST_CASE("integration from a lohnherr point stays put") {
  const TwoHopfState start = lohnherr(0.3);
  const Trajectory t = TwoHopfSystem(-1).integrate(start, 0, 10);
  CHECK(t.stop == StopReason::completed);
  CHECK(t.samples.size() == 10001);
  for (const auto& s : t.samples) {
    CHECK(std::abs(s.state.beta - start.beta) < 1e-10);
    CHECK(std::abs(s.state.gamma - start.gamma) < 1e-10);
  }
  CHECK(t.residual_summary.max_cd2 < 1e-9);
  CHECK(t.residual_summary.max_cd6 < 1e-9);
  CHECK(t.residual_summary.max_ga1 < 1e-9);
}

TEST_CASE("tan profile reproduction and order") {
  const double e4 = max_tan_error(4e-4);
  const double e2 = max_tan_error(2e-4);
  const double e1 = max_tan_error(1e-4);
  CHECK(e1 <= 1e-6);
  CHECK(std::log2(e4 / e2) >= 3.9);
  CHECK(std::log2(e2 / e1) >= 3.9);
}

TEST_CASE("tan profile residuals") {
  const Trajectory t = TwoHopfSystem(8).integrate(tan_start(0.05), 0.05, 0.1, 1e-4);
  CHECK(t.residual_summary.max_cd2 < 1e-10);
  CHECK(t.residual_summary.max_cd6 < 1e-10);
  CHECK(t.residual_summary.max_ga1 <= 1e-5);
  const Trajectory h = TwoHopfSystem(8).integrate(tan_start(0.05), 0.05, 0.1, 5e-5);
  CHECK(std::log2(t.residual_summary.max_ga1 / h.residual_summary.max_ga1) > 1.8);
  CHECK(TwoHopfSystem(8).branch(tan_start(0.1)) == StationaryBranch::tan_profile);
}

TEST_CASE("stationarity residual branches") {
  const TwoHopfSystem sys(1);
  const TwoHopfState ruled{0.0, 2.5, 0.0, 0.0, 0.0};
  CHECK(sys.stationarity_residual(ruled) == 0.0);
  CHECK(sys.branch(ruled) == StationaryBranch::ruled_minimal);
  // Tan profile at c = 8: gamma = 1, mu = -2 kills both summands.
  const TwoHopfSystem s8(8);
  CHECK(std::abs(s8.stationarity_residual(tan_start(0.1))) < 1e-12);
  CHECK(s8.branch(TwoHopfState::constant_alpha(1, 1, 1)) == StationaryBranch::generic);
}

TEST_CASE("fixed points for c < 0 are the lohnherr family") {
  // On the stationary set with dbeta = 0: gamma = -mu^3 / c and
  // beta^2 = -(gamma^2 + 3 mu^2 - 3 gamma mu + c).
  const double c = -1;
  const TwoHopfSystem sys(c);
  for (int i = 1; i < 40; ++i) {
    const double mu = -0.95 + 1.9 * i / 40.0;
    const double gamma = -mu * mu * mu / c;
    const double b2 = -(gamma * gamma + 3 * mu * mu - 3 * gamma * mu + c);
    REQUIRE(b2 > 0);
    const TwoHopfState s{3 * mu - gamma, std::sqrt(b2), gamma, mu, 0};
    CHECK(std::abs(sys.stationarity_residual(s)) < 1e-12);
    CHECK(std::abs(sys.rhs(s).dbeta) < 1e-12);
    CHECK(std::abs(sys.rhs(s).dgamma) < 1e-12);
    const TwoHopfState l = lohnherr(mu);
    CHECK(std::abs(l.alpha - s.alpha) < 1e-9);
    CHECK(std::abs(l.beta - s.beta) < 1e-9);
    CHECK(std::abs(l.gamma - s.gamma) < 1e-9);
  }
}

TEST_CASE("early stops") {
  // beta' = beta^2 - 1 drives beta through zero.
  const TwoHopfSystem sys(-1);
  const TwoHopfState down = TwoHopfState::constant_alpha(0, 0.05, 0);
  const Trajectory t = sys.integrate(down, 0, 1, 1e-3);
  CHECK(t.stop == StopReason::beta_floor);
  for (const auto& s : t.samples) CHECK(std::abs(s.state.beta) >= 1e-8);
  const Trajectory blow = TwoHopfSystem(8).integrate(tan_start(0.05), 0.05, 0.5, 1e-4);
  CHECK(blow.stop != StopReason::completed);
}

TEST_CASE("integrate rejects non constant-alpha states") {
  const TwoHopfSystem sys(1);
  CHECK_THROWS_AS(sys.integrate({1, 1, 1, 1, 0}, 0, 1), PreconditionError);
  CHECK_THROWS_AS(sys.integrate(TwoHopfState::constant_alpha(1, 1, 1), 1, 0), PreconditionError);
  CHECK_THROWS_AS(sys.integrate(TwoHopfState::constant_alpha(1, 0, 1), 0, 1), SingularityError);
}

TEST_CASE("constraint and equality along trajectories") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1, 1), b(0.5, 1.5);
  for (int i = 0; i < 10; ++i) {
    const double c = i % 2 ? -1.0 : 1.0;
    const Trajectory t = TwoHopfSystem(c).integrate(
        TwoHopfState::constant_alpha(u(rng), b(rng), u(rng)), 0, 0.2, 1e-3);
    CHECK(t.residual_summary.max_constraint < 1e-14);
    for (std::size_t k = 1; k < t.samples.size(); ++k)
      CHECK(t.samples[k].state.s > t.samples[k - 1].state.s);
    for (const auto& s : t.samples) {
      const BoundReport r = ricci_upper_bound(s.state.shape(), SpaceFormParams(2, c),
                                              Vector::Unit(3, 2));
      CHECK(std::abs(r.gap) <= 1e-8);
      CHECK(s.chi2 == doctest::Approx(s.state.gamma));
    }
  }
}

TEST_CASE("cd6 residual is linear in chi2") {
  const TwoHopfSystem sys(1);
  const TwoHopfState s = TwoHopfState::constant_alpha(0.4, 1.1, -0.3);
  FrameScalars fs = sys.frame_scalars(s);
  const CodazziResiduals base = sys.codazzi_residuals(s, fs, 0.0);
  CHECK(std::abs(base.cd2) < 1e-14);
  CHECK(std::abs(base.cd6) < 1e-14);
  fs.chi2 += 0.1;
  const CodazziResiduals bumped = sys.codazzi_residuals(s, fs, 0.0);
  CHECK(std::abs(bumped.cd6) == doctest::Approx(std::abs(s.mu - s.gamma) * 0.1));
}
