#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "rhlab/ricci_bound.hpp"

using namespace rhlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

ShapeState diag3(double a, double b, double d) {
  Vector v(3);
  v << a, b, d;
  return ShapeState::diagonal(v);
}

template <class T>
T f_of(std::initializer_list<T> xs) {
  const std::vector<T> v(xs);
  return lemma_f(std::span<const T>(v));
}

ShapeState random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-3, 3);
  const int dim = 2 * n - 1;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = u(rng);
  return ShapeState::from_upper(AdaptedFrame::standard(n), m);
}

}  // namespace

TEST_CASE("quadratic form f examples") {
  CHECK(f_of<double>({0, 0, 0}) == 0.0);
  CHECK(f_of<double>({1, 2, 1}) == 2.0);
  const std::vector<double> t{1, 2, 1};
  CHECK(lemma_f_bound(std::span<const double>(t)) == 2.0);
  CHECK(lemma_f_gap(std::span<const double>(t)) == 0.0);
  const std::vector<double> five{1, 1, 1, 1, 2};
  const std::span<const double> s5(five);
  CHECK(lemma_f(s5) == 4.0);
  CHECK(lemma_f_bound(s5) == 4.5);
  CHECK(lemma_f_gap(s5) == 0.5);
}

TEST_CASE("square identity holds in floating point and exactly") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-5, 5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t len = 3 + 2 * (t % 3);
    std::vector<double> xs(len);
    std::vector<mpq_class> qs(len);
    for (std::size_t i = 0; i < len; ++i) {
      xs[i] = u(rng);
      qs[i] = mpq_class(num(rng), den(rng));
      qs[i].canonicalize();
    }
    const std::span<const double> sx(xs);
    CHECK(std::abs(lemma_f_bound(sx) - lemma_f(sx) - lemma_f_gap(sx)) < 1e-12);
    const std::span<const mpq_class> sq(qs);
    CHECK(lemma_f_bound(sq) - lemma_f(sq) == lemma_f_gap(sq));
  }
}

TEST_CASE("ricci upper bound examples") {
  const BoundReport sphere =
      ricci_upper_bound(diag3(2 / kSqrt3, kSqrt3, kSqrt3), SpaceFormParams(2, 1), Vector::Unit(3, 0));
  CHECK(sphere.ric == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(sphere.bound == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(sphere.equality);

  const BoundReport horo =
      ricci_upper_bound(diag3(2, 1, 1), SpaceFormParams(2, -1), Vector::Unit(3, 2));
  CHECK(horo.ric == doctest::Approx(-2.0));
  CHECK(horo.bound == doctest::Approx(-2.0));
  CHECK(horo.equality);
  CHECK(std::abs(horo.trace_b - 3 * horo.mu) < 1e-12);

  const BoundReport flat =
      ricci_upper_bound(diag3(0, 0, 0), SpaceFormParams(2, 1), Vector::Unit(3, 0));
  CHECK(flat.ric == 2.0);
  CHECK(flat.bound == 2.0);
  CHECK(flat.equality);
}

TEST_CASE("equality structure examples") {
  const auto block = equality_structure(diag3(0.5, 2.5, 1.0), Vector::Unit(3, 2));
  REQUIRE(block.has_value());
  CHECK(block->mu == 1.0);
  CHECK(block->b.rows() == 2);
  CHECK(block->b.trace() == doctest::Approx(3.0));

  Matrix tan_profile(3, 3);
  tan_profile << -7, 0, 0, 0, 1, 0, 0, 0, -2;
  const auto tp = equality_structure(ShapeState(AdaptedFrame::standard(2), tan_profile),
                                     Vector::Unit(3, 2));
  REQUIRE(tp.has_value());
  CHECK(tp->mu == -2.0);
  CHECK(tp->b.trace() == doctest::Approx(-6.0));

  CHECK_FALSE(equality_structure(diag3(1, 1, 1), Vector::Unit(3, 2)).has_value());
}

TEST_CASE("completed frame is orthonormal with x last") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int dim : {3, 5}) {
    for (int t = 0; t < 20; ++t) {
      Vector x(dim);
      for (int i = 0; i < dim; ++i) x(i) = g(rng);
      x.normalize();
      const Matrix f = completed_frame(x);
      CHECK((f.transpose() * f - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((f.col(dim - 1) - x).norm() < 1e-15);
    }
  }
  const Matrix f = completed_frame(Vector::Unit(3, 0));
  CHECK((f.col(0) - Vector::Unit(3, 1)).norm() == 0.0);
  CHECK((f.col(1) - Vector::Unit(3, 2)).norm() == 0.0);
}

TEST_CASE("gap never negative on random states") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> g;
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 2;
    const ShapeState s = random_state(rng, n);
    Vector x(2 * n - 1);
    for (int i = 0; i < x.size(); ++i) x(i) = g(rng);
    x.normalize();
    const double c = (t % 3 == 0) ? -1.0 : 2.0;
    const BoundReport r = ricci_upper_bound(s, SpaceFormParams(n, c), x);
    CHECK(r.gap >= -1e-9);
    CHECK(r.ric == doctest::Approx(ricci_direct(s, SpaceFormParams(n, c), x)));
  }
}

TEST_CASE("equality detector agrees with a vanishing gap") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 400; ++t) {
    const bool engineer = t % 2 == 0;
    Matrix m = random_state(rng, 2).a();
    const int k = t % 3;
    if (engineer) {
      for (int j = 0; j < 3; ++j)
        if (j != k) m(j, k) = m(k, j) = 0.0;
      const int j = (k + 1) % 3;
      m(j, j) += 3.0 * m(k, k) - (m.trace() - m(k, k));
    }
    const ShapeState s(AdaptedFrame::standard(2), m);
    const Vector x = Vector::Unit(3, k);
    const BoundReport r = ricci_upper_bound(s, SpaceFormParams(2, 1), x);
    const bool present = equality_structure(s, x).has_value();
    CHECK(present == engineer);
    CHECK(present == (r.gap <= 1e-9));
    CHECK(present == r.equality);
  }
}

TEST_CASE("n = 2 bound specializes to the two closed forms") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const ShapeState s = random_state(rng, 2);
    const double c = t % 2 ? 1.0 : -0.5;
    const SpaceFormParams sf(2, c);
    const double h = mean_curvature_norm(s);
    const Vector xi = Vector::Unit(3, 0);
    const double k_xi = normal_curvature(s, xi);
    CHECK(ricci_bound_value(s, sf, xi) ==
          doctest::Approx(9.0 / 8.0 * h * h + k_xi * k_xi + 2 * c));
    Vector u(3);
    u << 0, g(rng), g(rng);
    u.normalize();
    const double k_u = normal_curvature(s, u);
    CHECK(ricci_bound_value(s, sf, u) ==
          doctest::Approx(9.0 / 8.0 * h * h + k_u * k_u + 5 * c));
  }
}
