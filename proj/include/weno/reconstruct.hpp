// Fifth-order interface reconstruction from five point values.
#pragma once

#include <cassert>

#include <Eigen/Core>

#include "weno/indicators.hpp"
#include "weno/weights.hpp"

namespace weno {

/// LEFT reconstructs at x_{i+1/2} from {i-2..i+2} (upwind for f+); RIGHT is its
/// mirror image, used for f- at the same interface from {i-1..i+3}.
enum class Bias { Left, Right };

/// Third-order candidates (f^0, f^1, f^2) at x_{i+1/2} from the three substencils.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 1> candidate_fluxes(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  assert(v.size() == 5);
  return Eigen::Matrix<S, 3, 1>(
      S(1) / S(3) * v(0) - S(7) / S(6) * v(1) + S(11) / S(6) * v(2),
      -S(1) / S(6) * v(1) + S(5) / S(6) * v(2) + S(1) / S(3) * v(3),
      S(1) / S(3) * v(2) + S(5) / S(6) * v(3) - S(1) / S(6) * v(4));
}

/// Fifth-order upwind flux at x_{i+1/2}; equals the d-weighted sum of the candidates.
template <typename Derived>
typename Derived::Scalar fd_flux5(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  assert(v.size() == 5);
  return S(1) / S(30) * v(0) - S(13) / S(60) * v(1) + S(47) / S(60) * v(2) + S(9) / S(20) * v(3) -
         S(1) / S(20) * v(4);
}

/// weno_interface_flux with the weight family fixed at compile time.
template <WeightFamily Family, typename Derived>
typename Derived::Scalar weno_interface_flux(const Eigen::MatrixBase<Derived>& v, typename Derived::Scalar eps,
                                             typename Derived::Scalar p, Bias bias,
                                             WeightTriple<typename Derived::Scalar>* weights_out = nullptr) {
  using S = typename Derived::Scalar;
  assert(v.size() == 5);
  StencilWindow<S> window = v;
  if (bias == Bias::Right) window.reverseInPlace();
  WeightTriple<S> omega;
  if constexpr (Family == WeightFamily::Linear) omega = weights_linear<S>();
  else omega = nonlinear_weights<Family>(beta_js(window), eps, p);
  if (weights_out) *weights_out = omega;
  return omega.dot(candidate_fluxes(window));
}

/// Convex combination of the candidates with weights from `scheme`.
/// If `weights_out` is given it receives the weights actually used.
template <typename Derived>
typename Derived::Scalar weno_interface_flux(const Eigen::MatrixBase<Derived>& v, const SchemeSpec& scheme,
                                             Bias bias = Bias::Left,
                                             WeightTriple<typename Derived::Scalar>* weights_out = nullptr) {
  using S = typename Derived::Scalar;
  return with_family(scheme.family, [&](auto family) {
    return weno_interface_flux<decltype(family)::value>(v, static_cast<S>(scheme.eps), static_cast<S>(scheme.p), bias,
                                                       weights_out);
  });
}

}  // namespace weno
