// Linear and nonlinear weight families mapping smoothness indicators to
// convex combination weights.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>

#include "weno/indicators.hpp"

namespace weno {

template <typename Scalar>
using WeightTriple = Eigen::Matrix<Scalar, 3, 1>;

enum class WeightFamily { Linear, JS, M, Z, ZR };

/// Weight family with its exponent and regularization.
struct SchemeSpec {
  WeightFamily family = WeightFamily::ZR;
  double p = 3.0;      // used by Z and ZR
  double eps = 1e-40;  // added to beta (JS, M, Z) or to beta^(1/p) (ZR)

  /// Defaults: eps = 1e-6 for JS and 1e-40 otherwise; p = 1 for Z, 3 for ZR.
  static SchemeSpec defaults(WeightFamily family);
  static SchemeSpec linear() { return defaults(WeightFamily::Linear); }
  static SchemeSpec js() { return defaults(WeightFamily::JS); }
  static SchemeSpec m() { return defaults(WeightFamily::M); }
  static SchemeSpec z() { return defaults(WeightFamily::Z); }
  static SchemeSpec zr(double p = 3.0) {
    auto s = defaults(WeightFamily::ZR);
    s.p = p;
    return s;
  }

  void validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("SchemeSpec: eps must be positive");
    if (!(p >= 1.0)) throw std::invalid_argument("SchemeSpec: p must be >= 1");
  }
  std::string name() const;
};

inline SchemeSpec SchemeSpec::defaults(WeightFamily family) {
  SchemeSpec s;
  s.family = family;
  s.eps = family == WeightFamily::JS ? 1e-6 : 1e-40;
  s.p = family == WeightFamily::ZR ? 3.0 : 1.0;
  return s;
}

std::string_view family_name(WeightFamily family);
/// Accepts "linear", "js", "m", "z", "zr" (case-insensitive); throws std::invalid_argument otherwise.
WeightFamily parse_family(std::string_view text);

inline std::string SchemeSpec::name() const { return std::string(family_name(family)); }

/// d = (1/10, 3/5, 3/10)
template <typename Scalar = double>
WeightTriple<Scalar> weights_linear() {
  return WeightTriple<Scalar>(Scalar(1) / Scalar(10), Scalar(3) / Scalar(5), Scalar(3) / Scalar(10));
}

template <typename Derived>
WeightTriple<typename Derived::Scalar> weights_js(const Eigen::MatrixBase<Derived>& beta,
                                                  typename Derived::Scalar eps) {
  using S = typename Derived::Scalar;
  const WeightTriple<S> d = weights_linear<S>();
  WeightTriple<S> alpha;
  for (int k = 0; k < 3; ++k) {
    const S denom = beta(k) + eps;
    alpha(k) = d(k) / (denom * denom);
  }
  return alpha / alpha.sum();
}

namespace detail {

/// Normalized d_k (1 + q_k^p). When q^p overflows (an indicator of exactly zero with
/// tiny eps and large p) every alpha is rescaled by max(q)^p, which cancels in the ratio.
template <typename Scalar>
WeightTriple<Scalar> z_type_weights(const WeightTriple<Scalar>& d, const WeightTriple<Scalar>& q, Scalar p) {
  using std::isfinite;
  WeightTriple<Scalar> alpha;
  for (int k = 0; k < 3; ++k) alpha(k) = d(k) * (Scalar(1) + pth_power(q(k), p));
  const Scalar sum = alpha.sum();
  if (isfinite(sum)) return alpha / sum;
  const Scalar m = q.maxCoeff();
  for (int k = 0; k < 3; ++k) alpha(k) = d(k) * (pth_power(Scalar(1) / m, p) + pth_power(q(k) / m, p));
  return alpha / alpha.sum();
}

}  // namespace detail

/// Henrick's mapping g_d(omega); fixes 0, d and 1.
template <typename Scalar>
Scalar map_g(Scalar omega, Scalar d) {
  if (!(omega >= Scalar(0) && omega <= Scalar(1))) throw std::domain_error("map_g: omega outside [0, 1]");
  if (!(d > Scalar(0) && d < Scalar(1))) throw std::domain_error("map_g: d outside (0, 1)");
  return omega * (d + d * d - 3 * d * omega + omega * omega) / (d * d + omega * (1 - 2 * d));
}

template <typename Derived>
WeightTriple<typename Derived::Scalar> weights_m(const Eigen::MatrixBase<Derived>& beta,
                                                 typename Derived::Scalar eps) {
  using S = typename Derived::Scalar;
  const WeightTriple<S> d = weights_linear<S>();
  const WeightTriple<S> omega = weights_js(beta, eps);
  WeightTriple<S> alpha;
  for (int k = 0; k < 3; ++k) alpha(k) = map_g(omega(k), d(k));
  return alpha / alpha.sum();
}

template <typename Derived>
WeightTriple<typename Derived::Scalar> weights_z(const Eigen::MatrixBase<Derived>& beta,
                                                 typename Derived::Scalar eps, typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  const WeightTriple<S> d = weights_linear<S>();
  const S tau = tau_z(beta);
  WeightTriple<S> q;
  for (int k = 0; k < 3; ++k) q(k) = tau / (beta(k) + eps);
  return detail::z_type_weights(d, q, p);
}

/// Z-type weights built on p-th roots of the indicators; eps is added to the rooted indicator.
template <typename Derived>
WeightTriple<typename Derived::Scalar> weights_zr(const Eigen::MatrixBase<Derived>& beta,
                                                  typename Derived::Scalar eps, typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  using std::abs;
  const WeightTriple<S> d = weights_linear<S>();
  const WeightTriple<S> root(pth_root(beta(0), p), pth_root(beta(1), p), pth_root(beta(2), p));
  const S tau = abs(root(0) - root(2));
  WeightTriple<S> q;
  for (int k = 0; k < 3; ++k) q(k) = tau / (root(k) + eps);
  return detail::z_type_weights(d, q, p);
}

/// Weights of a family fixed at compile time; lets inner loops skip the dispatch.
template <WeightFamily Family, typename Derived>
WeightTriple<typename Derived::Scalar> nonlinear_weights(const Eigen::MatrixBase<Derived>& beta,
                                                         typename Derived::Scalar eps, typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  if constexpr (Family == WeightFamily::Linear) return weights_linear<S>();
  else if constexpr (Family == WeightFamily::JS) return weights_js(beta, eps);
  else if constexpr (Family == WeightFamily::M) return weights_m(beta, eps);
  else if constexpr (Family == WeightFamily::Z) return weights_z(beta, eps, p);
  else return weights_zr(beta, eps, p);
}

template <typename Derived>
WeightTriple<typename Derived::Scalar> nonlinear_weights(const Eigen::MatrixBase<Derived>& beta,
                                                         const SchemeSpec& scheme) {
  using S = typename Derived::Scalar;
  const S eps = static_cast<S>(scheme.eps);
  const S p = static_cast<S>(scheme.p);
  switch (scheme.family) {
    case WeightFamily::Linear: return nonlinear_weights<WeightFamily::Linear>(beta, eps, p);
    case WeightFamily::JS: return nonlinear_weights<WeightFamily::JS>(beta, eps, p);
    case WeightFamily::M: return nonlinear_weights<WeightFamily::M>(beta, eps, p);
    case WeightFamily::Z: return nonlinear_weights<WeightFamily::Z>(beta, eps, p);
    case WeightFamily::ZR: return nonlinear_weights<WeightFamily::ZR>(beta, eps, p);
  }
  throw std::invalid_argument("nonlinear_weights: unknown weight family");
}

/// Calls `f(std::integral_constant<WeightFamily, F>{})` for the runtime family.
template <typename F>
decltype(auto) with_family(WeightFamily family, F&& f) {
  switch (family) {
    case WeightFamily::Linear: return f(std::integral_constant<WeightFamily, WeightFamily::Linear>{});
    case WeightFamily::JS: return f(std::integral_constant<WeightFamily, WeightFamily::JS>{});
    case WeightFamily::M: return f(std::integral_constant<WeightFamily, WeightFamily::M>{});
    case WeightFamily::Z: return f(std::integral_constant<WeightFamily, WeightFamily::Z>{});
    case WeightFamily::ZR: return f(std::integral_constant<WeightFamily, WeightFamily::ZR>{});
  }
  throw std::invalid_argument("unknown weight family");
}

}  // namespace weno
