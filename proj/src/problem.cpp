#include "weno/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weno {

double TimeStepRule::dt(const Grid1D& x, const Grid1D* y) const {
  if (!(c > 0.0)) throw std::invalid_argument("TimeStepRule: coefficient must be positive");
  switch (kind) {
    case TimeStepKind::DtEqCDx: return c * x.dx;
    case TimeStepKind::DtEqCDxPow: return c * std::pow(x.dx, 5.0 / 3.0);
    case TimeStepKind::DtEqCMinDxDy: return c * (y ? std::min(x.dx, y->dx) : x.dx);
  }
  throw std::invalid_argument("TimeStepRule: unknown kind");
}

ProblemSpec ProblemSpec::with_resolution(int n, std::optional<int> ny) const {
  ProblemSpec p = *this;
  p.x = build_grid(x.a, x.b, n, x.centering, x.n_ghost);
  if (y && ny) p.y = build_grid(y->a, y->b, *ny, y->centering, y->n_ghost);
  return p;
}

Eigen::ArrayXXd ProblemSpec::initial_state() const {
  const int m = model.components();
  if (!y) {
    Eigen::ArrayXXd u(m, x.n_cells);
    for (int i = 0; i < x.n_cells; ++i) u.col(i) = initial(x.x(i), 0.0).array();
    return u;
  }
  Eigen::ArrayXXd u(m, cell_count());
  for (int j = 0; j < y->n_cells; ++j)
    for (int i = 0; i < x.n_cells; ++i)
      u.col(static_cast<Eigen::Index>(j) * x.n_cells + i) = initial(x.x(i), y->x(j)).array();
  return u;
}

}  // namespace weno
