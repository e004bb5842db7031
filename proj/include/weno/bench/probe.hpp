// Nonlinear weights around the jump of the discontinuous advection problem.
#pragma once

#include <array>
#include <vector>

#include "weno/bench/csv.hpp"
#include "weno/weights.hpp"

namespace weno::bench {

inline constexpr std::array<double, 8> kProbeAbscissae{-0.035, -0.025, -0.015, -0.005, 0.005, 0.015, 0.025, 0.035};

/// Weights of the f+ reconstruction at x_{i+1/2}, reported at cell i, for every cell.
/// By default they are the ones computed in the first stage of the first step, i.e.
/// from the initial data; `after_first_step` takes the first stage of the second step.
std::vector<WeightTriple<double>> first_step_weights(const SchemeSpec& scheme, bool after_first_step = false);

/// Index of the cell centred at x on the probe grid; throws std::invalid_argument
/// if no centre lies within 1e-9 of x.
int probe_cell(double x);

struct ProbeRow {
  SchemeSpec scheme;
  double x = 0.0;
  WeightTriple<double> omega;
};

std::vector<ProbeRow> weight_probe(const std::vector<SchemeSpec>& schemes, bool after_first_step = false);

/// Columns: x, family, p, epsilon, omega0, omega1, omega2 (family as its enum index).
CsvTable probe_table(const std::vector<ProbeRow>& rows);

}  // namespace weno::bench
