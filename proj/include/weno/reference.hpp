// Exact and high-resolution reference solutions.
#pragma once

#include <Eigen/Core>

#include "weno/problem.hpp"
#include "weno/weights.hpp"

namespace weno {

/// sin(pi (x - t))
double advection_exact(double x, double t);

/// 1 for x <= t/2, else 0.
double burgers_shock_exact(double x, double t);

struct Primitive1D {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

enum class WaveKind { Shock, Rarefaction };

/// Solution of a 1D Euler Riemann problem.
struct RiemannFan {
  Primitive1D left, right;
  double gamma = 1.4;
  double p_star = 0.0;
  double u_star = 0.0;
  WaveKind left_wave = WaveKind::Rarefaction;
  WaveKind right_wave = WaveKind::Rarefaction;
  int iterations = 0;

  /// f_L(p) + f_R(p) + (u_R - u_L), whose root is p_star.
  double pressure_function(double p) const;
};

/// Exact Riemann solver: Newton from the two-rarefaction guess, falling back to
/// bisection whenever an iterate leaves the current bracket. Converges until
/// |f(p_star)| < 1e-12 (or the bracket collapses). Throws std::domain_error when
/// the data generate vacuum and std::invalid_argument on non-physical input.
RiemannFan solve_riemann_euler(const Primitive1D& left, const Primitive1D& right, double gamma = 1.4);

/// State at x/t = xi of the self-similar solution centred at x = 0.
Primitive1D sample_riemann(const RiemannFan& fan, double xi);

/// Fine-grid solution used as the "exact" answer for problems without a closed form.
struct SampledField {
  Grid1D grid;
  Eigen::ArrayXXd state;  // conserved, components x n

  /// Piecewise-linear interpolation of component k at x (clamped at the ends).
  double interpolate(int k, double x) const;
};

/// Runs `problem` to its final time at n cells with `scheme` (WENO-M by default).
SampledField highres_reference(const ProblemSpec& problem, const SchemeSpec& scheme = SchemeSpec::m(), int n = 2000);

}  // namespace weno
