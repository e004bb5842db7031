// Semi-discrete WENO operators and SSP-RK3 time integration.
#pragma once

#include <functional>
#include <optional>

#include <Eigen/Core>

#include "weno/mesh.hpp"
#include "weno/physics.hpp"
#include "weno/problem.hpp"
#include "weno/reconstruct.hpp"
#include "weno/weights.hpp"

namespace weno {

/// Weights used at interface x_{i+1/2} (i = `interface`, from -1 to n-1) for one
/// characteristic field and one split-flux bias.
struct InterfaceWeights {
  int interface = 0;
  int component = 0;
  Bias bias = Bias::Left;
  Eigen::Vector3d omega;
};

using WeightSink = std::function<void(const InterfaceWeights&)>;

/// L(u)_i = -(F_{i+1/2} - F_{i-1/2}) / dx for a scalar model, using a global
/// Lax-Friedrichs split: LEFT reconstruction of f+ plus RIGHT reconstruction of f-.
/// `u` is 1 x n (interior cells only); ghosts are filled from `bc` at time t.
Eigen::ArrayXXd spatial_operator_scalar(const Eigen::ArrayXXd& u, const Grid1D& grid, const BoundarySpec& bc,
                                        const ModelSpec& model, const SchemeSpec& scheme, double t,
                                        const WeightSink* sink = nullptr);

/// Characteristic-wise version for the 1D Euler system (3 x n). The split fluxes of
/// the six cells around each interface are projected with the left eigenvectors of
/// the arithmetic-mean state, reconstructed field by field, and mapped back.
Eigen::ArrayXXd spatial_operator_system(const Eigen::ArrayXXd& u, const Grid1D& grid, const BoundarySpec& bc,
                                        const ModelSpec& model, const SchemeSpec& scheme, double t,
                                        const WeightSink* sink = nullptr);

/// Dimension-by-dimension 2D Euler operator L_x + L_y. `u` is 4 x (nx*ny), cell
/// (i, j) at column j*nx + i.
Eigen::ArrayXXd spatial_operator_2d(const Eigen::ArrayXXd& u, const Grid2D& grid, const BoundarySpec& bc,
                                    const ModelSpec& model, const SchemeSpec& scheme, double t);

/// Directional pieces of spatial_operator_2d.
Eigen::ArrayXXd spatial_operator_2d_axis(const Eigen::ArrayXXd& u, const Grid2D& grid, const BoundarySpec& bc,
                                         const ModelSpec& model, const SchemeSpec& scheme, double t, Axis axis);

/// Dispatches on the problem's model and dimension.
Eigen::ArrayXXd spatial_operator(const ProblemSpec& problem, const SchemeSpec& scheme, const Eigen::ArrayXXd& u,
                                 double t, const WeightSink* sink = nullptr);

/// One SSP-RK3 step; `L(state, stage_time)` is evaluated at t, t + dt and t + dt/2.
template <typename Evaluator>
Eigen::ArrayXXd rk3_step(const Eigen::ArrayXXd& u, double dt, Evaluator&& L, double t) {
  const Eigen::ArrayXXd u1 = u + dt * L(u, t);
  const Eigen::ArrayXXd u2 = 0.75 * u + 0.25 * u1 + 0.25 * dt * L(u1, t + dt);
  return (1.0 / 3.0) * u + (2.0 / 3.0) * u2 + (2.0 / 3.0) * dt * L(u2, t + 0.5 * dt);
}

using StepObserver = std::function<void(long step, double t, const Eigen::ArrayXXd& state)>;

struct AdvanceOptions {
  StepObserver on_step;  // called with step 0 for the initial data, then after every step
  WeightSink on_weights;
  long weights_step = 0;  // step whose first-stage weights go to on_weights
  std::optional<double> final_time;
  std::optional<double> dt_coefficient;
};

struct AdvanceResult {
  Eigen::ArrayXXd state;
  double t = 0.0;
  long steps = 0;
  double dt = 0.0;  // nominal step
};

/// Integrates `problem` to its final time; the last step is shortened to land on it.
/// Throws std::runtime_error on NaN/Inf and NonPhysicalState on rho or P <= 0.
AdvanceResult advance(const ProblemSpec& problem, const SchemeSpec& scheme, const AdvanceOptions& options = {});

}  // namespace weno
