#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "weno/physics.hpp"

using namespace weno;

namespace {

Eigen::VectorXd random_prim(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> unit(0, 1);
  Eigen::VectorXd w(dim + 2);
  w(0) = 0.05 + 5 * unit(rng);
  for (int k = 1; k <= dim; ++k) w(k) = 6 * (unit(rng) - 0.5);
  w(dim + 1) = 0.01 + 10 * unit(rng);
  return w;
}

// Central finite-difference Jacobian of the flux.
Eigen::MatrixXd fd_jacobian(const ModelSpec& model, const Eigen::VectorXd& U, Axis axis) {
  const int m = static_cast<int>(U.size());
  Eigen::MatrixXd J(m, m);
  for (int k = 0; k < m; ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(U(k)));
    Eigen::VectorXd up = U, down = U;
    up(k) += h;
    down(k) -= h;
    J.col(k) = (flux(model, up, axis) - flux(model, down, axis)) / (2 * h);
  }
  return J;
}

}  // namespace

TEST_CASE("scalar fluxes") {
  CHECK(flux(ModelSpec::advection(1.0), Eigen::VectorXd::Constant(1, 0.7))(0) == 0.7);
  CHECK(flux(ModelSpec::advection(-2.0), Eigen::VectorXd::Constant(1, 0.5))(0) == -1.0);
  CHECK(flux(ModelSpec::burgers(), Eigen::VectorXd::Constant(1, 2.0))(0) == 2.0);
}

TEST_CASE("Euler flux at rest") {
  const ModelSpec m = ModelSpec::euler_1d();
  const Eigen::VectorXd F = flux(m, prim_to_cons(m, Eigen::Vector3d(1, 0, 1)));
  CHECK(F(0) == 0.0);
  CHECK(F(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(F(2) == 0.0);
  CHECK_THROWS_AS(flux(m, Eigen::Vector3d(-1, 0, 1)), NonPhysicalState);
  CHECK_THROWS_AS(flux(m, Eigen::Vector3d(1, 0, 0)), NonPhysicalState);
  CHECK_THROWS_AS(flux(m, Eigen::Vector2d(1, 0)), std::invalid_argument);
}

TEST_CASE("2D Euler fluxes") {
  const ModelSpec m = ModelSpec::euler_2d();
  const Eigen::VectorXd U = prim_to_cons(m, Eigen::Vector4d(2, 0.5, -1.5, 3));
  const Eigen::VectorXd F = flux(m, U, Axis::X);
  const Eigen::VectorXd G = flux(m, U, Axis::Y);
  CHECK(F(0) == doctest::Approx(1.0));
  CHECK(F(1) == doctest::Approx(2 * 0.25 + 3));
  CHECK(F(2) == doctest::Approx(-1.5));
  CHECK(G(0) == doctest::Approx(-3.0));
  CHECK(G(2) == doctest::Approx(2 * 2.25 + 3));
  CHECK(G(3) == doctest::Approx(-1.5 * (U(3) + 3)));
}

TEST_CASE("primitive and conserved variables") {
  const ModelSpec m = ModelSpec::euler_1d();
  const Eigen::VectorXd a = prim_to_cons(m, Eigen::Vector3d(1, 0, 1));
  CHECK(a(2) == doctest::Approx(2.5).epsilon(1e-15));
  const Eigen::VectorXd b = prim_to_cons(m, Eigen::Vector3d(0.125, 0, 0.1));
  CHECK(b(0) == 0.125);
  CHECK(b(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(prim_to_cons(m, Eigen::Vector3d(0, 0, 1)), NonPhysicalState);
  CHECK_THROWS_AS(cons_to_prim(m, Eigen::Vector3d(1, 0, -1)), NonPhysicalState);

  std::mt19937_64 rng(9);
  for (int dim : {1, 2}) {
    const ModelSpec model = dim == 1 ? ModelSpec::euler_1d() : ModelSpec::euler_2d();
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::VectorXd w = random_prim(rng, dim);
      const Eigen::VectorXd back = cons_to_prim(model, prim_to_cons(model, w));
      for (int k = 0; k < w.size(); ++k) CHECK(back(k) == doctest::Approx(w(k)).epsilon(1e-13));
    }
  }
  CHECK(prim_to_cons(ModelSpec::burgers(), Eigen::VectorXd::Constant(1, 0.3))(0) == 0.3);
}

TEST_CASE("wave speeds") {
  Eigen::ArrayXXd scalar(1, 3);
  scalar << 1, 0, -0.5;
  CHECK(max_wave_speed(ModelSpec::advection(1.0), scalar) == 1.0);
  CHECK(max_wave_speed(ModelSpec::advection(-3.0), scalar) == 3.0);
  CHECK(max_wave_speed(ModelSpec::burgers(), scalar) == 1.0);

  const ModelSpec m = ModelSpec::euler_1d();
  Eigen::ArrayXXd rest(3, 4);
  for (int i = 0; i < 4; ++i) rest.col(i) = prim_to_cons(m, Eigen::Vector3d(1, 0, 1)).array();
  CHECK(max_wave_speed(m, rest) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-15));
  rest(2, 1) = -1;
  CHECK_THROWS_AS(max_wave_speed(m, rest), NonPhysicalState);

  const ModelSpec m2 = ModelSpec::euler_2d();
  Eigen::ArrayXXd moving(4, 1);
  moving.col(0) = prim_to_cons(m2, Eigen::Vector4d(1, 0.5, -2, 1)).array();
  CHECK(max_wave_speed(m2, moving, Axis::X) == doctest::Approx(0.5 + std::sqrt(1.4)));
  CHECK(max_wave_speed(m2, moving, Axis::Y) == doctest::Approx(2 + std::sqrt(1.4)));
}

TEST_CASE("Lax-Friedrichs split") {
  auto [p, m] = lf_split(1.0, 1.0, 1.0);
  CHECK(p == 1.0);
  CHECK(m == 0.0);
  std::tie(p, m) = lf_split(0.0, 1.0, 2.0);
  CHECK(p == 1.0);
  CHECK(m == -1.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(-5, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Vector3d f = Eigen::Vector3d::NullaryExpr([&](Eigen::Index) { return unit(rng); });
    const Eigen::Vector3d u = Eigen::Vector3d::NullaryExpr([&](Eigen::Index) { return unit(rng); });
    const auto [fp, fm] = lf_split(f, u, std::abs(unit(rng)));
    CHECK((fp + fm - f).cwiseAbs().maxCoeff() <= 1e-14 * (1 + f.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("1D eigensystem reproduces the flux Jacobian") {
  const ModelSpec m = ModelSpec::euler_1d();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd U = prim_to_cons(m, random_prim(rng, 1));
    const auto [L, R] = euler_eigensystem(m, U);
    CHECK((L * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    const auto es = euler::eigensystem(euler::Vec3<double>(U), 1.4);
    const Eigen::MatrixXd J = R * es.eigenvalues.asDiagonal() * L;
    const Eigen::MatrixXd Jfd = fd_jacobian(m, U, Axis::X);
    CHECK((J - Jfd).norm() <= 1e-6 * (1 + Jfd.norm()));

    // eigenvalues of the numerical Jacobian
    Eigen::EigenSolver<Eigen::MatrixXd> solver(Jfd);
    std::vector<double> lambda;
    for (int k = 0; k < 3; ++k) lambda.push_back(solver.eigenvalues()(k).real());
    std::sort(lambda.begin(), lambda.end());
    for (int k = 0; k < 3; ++k) CHECK(lambda[k] == doctest::Approx(es.eigenvalues(k)).epsilon(1e-5));
  }
}

TEST_CASE("2D eigensystems") {
  const ModelSpec m = ModelSpec::euler_2d();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd U = prim_to_cons(m, random_prim(rng, 2));
    for (Axis axis : {Axis::X, Axis::Y}) {
      const auto [L, R] = euler_eigensystem(m, U, axis);
      CHECK((L * R - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
      const auto es = euler::eigensystem(euler::Vec4<double>(U), axis, 1.4);
      const Eigen::MatrixXd Jfd = fd_jacobian(m, U, axis);
      CHECK((R * es.eigenvalues.asDiagonal() * L - Jfd).norm() <= 1e-6 * (1 + Jfd.norm()));
    }

    // y eigensystem is the x eigensystem with the momenta relabelled
    Eigen::Vector4d swapped = U;
    std::swap(swapped(1), swapped(2));
    const auto ex = euler::eigensystem(euler::Vec4<double>(swapped), Axis::X, 1.4);
    const auto ey = euler::eigensystem(euler::Vec4<double>(U), Axis::Y, 1.4);
    Eigen::Matrix4d P = Eigen::Matrix4d::Identity();
    P.row(1).swap(P.row(2));
    CHECK((P * ex.right - ey.right).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((ex.left * P - ey.left).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("2D x-eigensystem at v = 0 contains the 1D system") {
  const auto e1 = euler::eigensystem(euler::Vec3<double>(prim_to_cons(ModelSpec::euler_1d(), Eigen::Vector3d(1.3, 0.4, 2.0))), 1.4);
  const auto e2 = euler::eigensystem(
      euler::Vec4<double>(prim_to_cons(ModelSpec::euler_2d(), Eigen::Vector4d(1.3, 0.4, 0.0, 2.0))), Axis::X, 1.4);
  const std::array<int, 3> rows{0, 1, 3};
  const std::array<int, 3> fields{0, 1, 3};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(e2.right(rows[a], fields[b]) == doctest::Approx(e1.right(a, b)).epsilon(1e-14));
      CHECK(e2.left(fields[a], rows[b]) == doctest::Approx(e1.left(a, b)).epsilon(1e-14));
    }
  CHECK(e2.right.row(2).cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  CHECK(e2.right(2, 2) == 1.0);
}

TEST_CASE("eigensystem rejects non-physical averages") {
  CHECK_THROWS_AS(euler_eigensystem(ModelSpec::euler_1d(), Eigen::Vector3d(1, 0, -1)), NonPhysicalState);
  CHECK_THROWS_AS(euler_eigensystem(ModelSpec::burgers(), Eigen::VectorXd::Constant(1, 1.0)), std::invalid_argument);
}
