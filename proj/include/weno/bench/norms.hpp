// Discrete error norms and convergence tables.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "weno/problem.hpp"
#include "weno/weights.hpp"

namespace weno::bench {

struct NormTriple {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// L1 = sum|e|/m, L2 = sqrt(sum e^2/m), Linf = max|e| with m = numeric.size().
/// Throws std::invalid_argument on a length mismatch or empty input.
NormTriple error_norms(const Eigen::ArrayXd& numeric, const Eigen::ArrayXd& exact);

struct ErrorReport {
  int n = 0;
  NormTriple error;
  std::optional<NormTriple> order;  // log2(e_prev / e), absent on the first row
};

using ExactSolution = std::function<double(double x, double t)>;

/// Point values of component 0 at the grid nodes, with the periodic image x_N
/// appended on a periodic node grid (N + 1 values over N unknowns).
Eigen::ArrayXd sample_nodes(const ProblemSpec& problem, const Eigen::ArrayXXd& state, Eigen::ArrayXd* abscissae = nullptr);

/// Errors at final time for each N, with orders against the previous row.
std::vector<ErrorReport> convergence_table(const ProblemSpec& problem, const SchemeSpec& scheme,
                                           const std::vector<int>& resolutions, const ExactSolution& exact);

}  // namespace weno::bench
