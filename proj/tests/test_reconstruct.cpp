#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "weno/reconstruct.hpp"

using namespace weno;
using Window = StencilWindow<double>;

namespace {

const std::vector<SchemeSpec>& all_schemes() {
  static const std::vector<SchemeSpec> schemes{SchemeSpec::linear(), SchemeSpec::js(), SchemeSpec::m(),
                                               SchemeSpec::z(),      SchemeSpec::zr(), SchemeSpec::zr(6)};
  return schemes;
}

Window random_window(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1, 1);
  std::uniform_int_distribution<int> shape(0, 2);
  Window v;
  for (int k = 0; k < 5; ++k) v(k) = unit(rng);
  if (shape(rng) == 0) {
    // step data
    const int jump = shape(rng) + 1;
    for (int k = 0; k < 5; ++k) v(k) = k <= jump ? 0.0 : 1.0;
  }
  return v;
}

}  // namespace

TEST_CASE("candidate fluxes") {
  const auto c = candidate_fluxes(Window::Constant(2.25));
  for (int k = 0; k < 3; ++k) CHECK(c(k) == doctest::Approx(2.25).epsilon(1e-15));
  const auto lin = candidate_fluxes(Window(0, 1, 2, 3, 4));
  for (int k = 0; k < 3; ++k) CHECK(lin(k) == doctest::Approx(2.5).epsilon(1e-15));
  const auto quad = candidate_fluxes(Window(4, 1, 0, 1, 4));
  for (int k = 0; k < 3; ++k) CHECK(quad(k) == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("fifth-order flux") {
  CHECK(fd_flux5(Window::Constant(-3.0)) == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(fd_flux5(Window(0, 1, 2, 3, 4)) == doctest::Approx(2.5).epsilon(1e-15));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Window v = random_window(rng);
    const double combined = weights_linear().dot(candidate_fluxes(v));
    CHECK(fd_flux5(v) == doctest::Approx(combined).epsilon(1e-14));
    CHECK(weno_interface_flux(v, SchemeSpec::linear()) == doctest::Approx(fd_flux5(v)).epsilon(1e-14));
  }
}

TEST_CASE("constant window reconstructs exactly for every scheme") {
  for (const auto& s : all_schemes()) {
    CHECK(weno_interface_flux(Window::Constant(0.7), s) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(weno_interface_flux(Window::Constant(0.7), s, Bias::Right) == doctest::Approx(0.7).epsilon(1e-15));
  }
}

TEST_CASE("a jump in the right substencil pulls the flux towards f^0") {
  const Window v(0, 0, 0, 1, 1);
  const auto cand = candidate_fluxes(v);
  WeightTriple<double> omega;
  const double zr = weno_interface_flux(v, SchemeSpec::zr(3), Bias::Left, &omega);
  CHECK(zr >= cand.minCoeff());
  CHECK(zr <= cand.maxCoeff());
  CHECK(std::abs(zr - cand(0)) < std::abs(fd_flux5(v) - cand(0)));
  CHECK(omega(0) > 0.1);
  CHECK(std::abs(omega.sum() - 1.0) < 1e-15);
}

TEST_CASE("convexity, mirror symmetry and translation on random windows") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(-1, 1);
  for (int trial = 0; trial < 20000; ++trial) {
    const Window v = random_window(rng);
    const Window reversed = v.reverse();
    const auto cand = candidate_fluxes(v);
    const double slack = 1e-14 * (1 + cand.cwiseAbs().maxCoeff());
    const double c = 10 * unit(rng);
    for (const auto& s : all_schemes()) {
      const double left = weno_interface_flux(v, s, Bias::Left);
      REQUIRE(left >= cand.minCoeff() - slack);
      REQUIRE(left <= cand.maxCoeff() + slack);
      REQUIRE(weno_interface_flux(v, s, Bias::Right) == weno_interface_flux(reversed, s, Bias::Left));
      const double shifted = weno_interface_flux(Window(v.array() + c), s, Bias::Left);
      REQUIRE(std::abs(shifted - (left + c)) <= 1e-12 * (std::abs(c) + 1));
    }
  }
}

TEST_CASE("weights are nearly scale invariant for tiny epsilon") {
  const Window v(0.1, 0.4, -0.3, 0.8, 0.2);
  for (auto family : {WeightFamily::M, WeightFamily::Z, WeightFamily::ZR}) {
    const SchemeSpec s = SchemeSpec::defaults(family);
    WeightTriple<double> base, scaled;
    weno_interface_flux(v, s, Bias::Left, &base);
    for (double factor : {1e-2, 0.3, 7.0, 1e2}) {
      weno_interface_flux(Window(factor * v), s, Bias::Left, &scaled);
      CHECK((scaled - base).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("linear flux is fifth-order accurate") {
  // (F_{i+1/2} - F_{i-1/2}) / dx against f'(x_i) for f = sin(pi x)
  using std::numbers::pi;
  const double x0 = 0.3;
  std::vector<double> errors;
  for (double dx : {0.1, 0.05, 0.025, 0.0125}) {
    Window right, left;
    for (int k = 0; k < 5; ++k) {
      right(k) = std::sin(pi * (x0 + (k - 2) * dx));
      left(k) = std::sin(pi * (x0 + (k - 3) * dx));
    }
    errors.push_back(std::abs((fd_flux5(right) - fd_flux5(left)) / dx - pi * std::cos(pi * x0)));
  }
  for (std::size_t k = 1; k < errors.size(); ++k) CHECK(std::log2(errors[k - 1] / errors[k]) >= 4.5);
}
