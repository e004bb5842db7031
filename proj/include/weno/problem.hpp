// Problem description consumed by the time integrator.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "weno/mesh.hpp"
#include "weno/physics.hpp"

namespace weno {

enum class TimeStepKind {
  DtEqCDx,       // dt = c dx
  DtEqCDxPow,    // dt = c dx^(5/3)
  DtEqCMinDxDy,  // dt = c min(dx, dy)
};

struct TimeStepRule {
  TimeStepKind kind = TimeStepKind::DtEqCDx;
  double c = 0.4;

  double dt(const Grid1D& x, const Grid1D* y = nullptr) const;
};

enum class ReferenceKind { ClosedForm, ExactRiemann, HighresM2000, None };

/// Initial condition and boundary setup for one experiment.
///
/// `initial` returns the conserved state at (x, y); 1D problems ignore y.
struct ProblemSpec {
  std::string name;
  ModelSpec model;
  Grid1D x;
  std::optional<Grid1D> y;
  std::function<Eigen::VectorXd(double x, double y)> initial;
  BoundarySpec bc;
  double final_time = 0.0;
  TimeStepRule dt_rule;
  std::vector<int> resolutions;
  ReferenceKind reference = ReferenceKind::None;

  int dimension() const { return y ? 2 : 1; }
  Grid2D grid_2d() const { return Grid2D{x, *y}; }
  long cell_count() const { return static_cast<long>(x.n_cells) * (y ? y->n_cells : 1); }

  /// Same problem on a grid with n cells along x (and ny along y for 2D, default unchanged).
  ProblemSpec with_resolution(int n, std::optional<int> ny = std::nullopt) const;

  /// Conserved initial data packed as components x cells (2D: cell (i, j) at column j*nx + i).
  Eigen::ArrayXXd initial_state() const;
};

}  // namespace weno
