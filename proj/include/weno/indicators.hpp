// Smoothness indicators of the three 3-point substencils and the global
// indicators built from them.
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <type_traits>
#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace weno {

/// Five ordered samples f_{i-2}, ..., f_{i+2} feeding one interface reconstruction.
template <typename Scalar>
using StencilWindow = Eigen::Matrix<Scalar, 5, 1>;

/// (beta_0, beta_1, beta_2) of substencils S_0 = {i-2..i}, S_1 = {i-1..i+1}, S_2 = {i..i+2}.
template <typename Scalar>
using IndicatorTriple = Eigen::Matrix<Scalar, 3, 1>;

/// Jiang-Shu indicators, evaluated term by term as the quadratic forms are written.
template <typename Derived>
IndicatorTriple<typename Derived::Scalar> beta_js(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  assert(v.size() == 5);
  const S c13 = S(13) / S(12);
  const S c14 = S(1) / S(4);
  const S fm2 = v(0), fm1 = v(1), f0 = v(2), fp1 = v(3), fp2 = v(4);

  const S d0a = fm2 - 2 * fm1 + f0;
  const S d0b = fm2 - 4 * fm1 + 3 * f0;
  const S d1a = fm1 - 2 * f0 + fp1;
  const S d1b = fm1 - fp1;
  const S d2a = f0 - 2 * fp1 + fp2;
  const S d2b = 3 * f0 - 4 * fp1 + fp2;

  return IndicatorTriple<S>(c13 * d0a * d0a + c14 * d0b * d0b,
                            c13 * d1a * d1a + c14 * d1b * d1b,
                            c13 * d2a * d2a + c14 * d2b * d2b);
}

/// |beta_0 - beta_2|
template <typename Derived>
typename Derived::Scalar tau_z(const Eigen::MatrixBase<Derived>& beta) {
  using std::abs;
  return abs(beta(0) - beta(2));
}

namespace detail {

template <typename Scalar>
bool is_small_integer(Scalar p) {
  using std::floor;
  return p == floor(p) && p >= Scalar(1) && p <= Scalar(64);
}

/// Cube root of a double: exponent-bit seed, two Halley steps and a Newton polish,
/// within a few ulp of std::cbrt at well under half its cost. Zero, negative and
/// extreme (outside [1e-300, 1e300], where y^3 would leave the double range) inputs go to std::cbrt.
inline double cbrt_fast(double x) {
  if (!(x >= 1e-300 && x <= 1e300)) return std::cbrt(x);
  double y = std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) / 3 + 0x2A9F7893782DA1CEull);
  for (int k = 0; k < 2; ++k) {
    const double y3 = y * y * y;
    y *= (y3 + 2 * x) / (2 * y3 + x);
  }
  return y - (y * y * y - x) / (3 * y * y);
}

template <typename Scalar>
Scalar cube_root(Scalar x) {
  using std::cbrt;
  if constexpr (std::is_same_v<Scalar, double>) return cbrt_fast(x);
  else return cbrt(x);
}

}  // namespace detail

/// x^(1/p) for x >= 0 with shortcuts for p = 1, 2, 3.
template <typename Scalar>
Scalar pth_root(Scalar x, Scalar p) {
  using std::pow;
  using std::sqrt;
  if (p == Scalar(1)) return x;
  if (p == Scalar(2)) return sqrt(x);
  if (p == Scalar(3)) return detail::cube_root(x);
  return pow(x, Scalar(1) / p);
}

/// x^p, by repeated multiplication when p is a small positive integer.
template <typename Scalar>
Scalar pth_power(Scalar x, Scalar p) {
  using std::pow;
  if (p == Scalar(1)) return x;
  if (p == Scalar(2)) return x * x;
  if (p == Scalar(3)) return x * x * x;
  if (!detail::is_small_integer(p)) return pow(x, p);
  auto n = static_cast<unsigned>(p);
  Scalar result(1);
  Scalar base = x;
  while (n) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

/// T5(p) = |beta_0^(1/p) - beta_2^(1/p)|^p, the p-th power of the rooted global indicator.
template <typename Scalar>
Scalar tau_zr_pow(Scalar beta0, Scalar beta2, Scalar p) {
  using std::abs;
  if (!(p >= Scalar(1))) throw std::domain_error("tau_zr_pow: exponent p must be >= 1");
  if (beta0 < Scalar(0) || beta2 < Scalar(0)) throw std::domain_error("tau_zr_pow: indicators must be non-negative");
  return pth_power(abs(pth_root(beta0, p) - pth_root(beta2, p)), p);
}

/// Phi(x) = (a^(1/x) - b^(1/x))^x for a > b > 0, x > 0.
///
/// Evaluated as a * (1 - (b/a)^(1/x))^x through log/expm1 so neither a^(1/x)
/// overflow at small x nor cancellation at large x spoils the result.
template <typename Scalar>
Scalar phi(Scalar a, Scalar b, Scalar x) {
  using std::exp;
  using std::expm1;
  using std::log;
  if (!(b > Scalar(0)) || !(a > b)) throw std::domain_error("phi: need a > b > 0");
  if (!(x > Scalar(0))) throw std::domain_error("phi: need x > 0");
  const Scalar one_minus_ratio_root = -expm1(log(b / a) / x);
  return a * exp(x * log(one_minus_ratio_root));
}

/// log Phi(x), finite wherever the arguments are valid even when Phi itself underflows.
template <typename Scalar>
Scalar log_phi(Scalar a, Scalar b, Scalar x) {
  using std::expm1;
  using std::log;
  if (!(b > Scalar(0)) || !(a > b)) throw std::domain_error("log_phi: need a > b > 0");
  if (!(x > Scalar(0))) throw std::domain_error("log_phi: need x > 0");
  return log(a) + x * log(-expm1(log(b / a) / x));
}

}  // namespace weno
