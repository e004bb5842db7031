#include "weno/bench/probe.hpp"

#include <cmath>
#include <stdexcept>

#include "weno/bench/registry.hpp"
#include "weno/evolve.hpp"

namespace weno::bench {

std::vector<WeightTriple<double>> first_step_weights(const SchemeSpec& scheme, bool after_first_step) {
  const ProblemSpec problem = make_problem("advection-jump");
  const int n = problem.x.n_cells;
  std::vector<WeightTriple<double>> out(n, WeightTriple<double>::Constant(std::nan("")));

  AdvanceOptions options;
  options.weights_step = after_first_step ? 1 : 0;
  options.on_weights = [&](const InterfaceWeights& w) {
    if (w.bias == Bias::Left && w.component == 0 && w.interface >= 0 && w.interface < n) out[w.interface] = w.omega;
  };
  const double dt = problem.dt_rule.dt(problem.x);
  options.final_time = after_first_step ? 2 * dt : dt;
  advance(problem, scheme, options);
  return out;
}

int probe_cell(double x) {
  const Grid1D grid = make_problem("advection-jump").x;
  const double s = (x - grid.a) / grid.dx - 0.5;
  const long i = std::lround(s);
  if (i < 0 || i >= grid.n_cells || std::abs(grid.x(static_cast<int>(i)) - x) > 1e-9)
    throw std::invalid_argument("probe abscissa " + std::to_string(x) + " is not a cell centre");
  return static_cast<int>(i);
}

std::vector<ProbeRow> weight_probe(const std::vector<SchemeSpec>& schemes, bool after_first_step) {
  std::vector<ProbeRow> rows;
  for (const SchemeSpec& scheme : schemes) {
    const auto omega = first_step_weights(scheme, after_first_step);
    for (double x : kProbeAbscissae) rows.push_back({scheme, x, omega[probe_cell(x)]});
  }
  return rows;
}

CsvTable probe_table(const std::vector<ProbeRow>& rows) {
  CsvTable t;
  t.columns = {"x", "family", "p", "epsilon", "omega0", "omega1", "omega2"};
  for (const auto& r : rows)
    t.rows.push_back({r.x, static_cast<double>(r.scheme.family), r.scheme.p, r.scheme.eps, r.omega(0), r.omega(1),
                      r.omega(2)});
  return t;
}

}  // namespace weno::bench
