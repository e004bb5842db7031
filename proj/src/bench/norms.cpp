#include "weno/bench/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "weno/evolve.hpp"

namespace weno::bench {

NormTriple error_norms(const Eigen::ArrayXd& numeric, const Eigen::ArrayXd& exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norms: length mismatch");
  if (numeric.size() == 0) throw std::invalid_argument("error_norms: empty input");
  const Eigen::ArrayXd e = (exact - numeric).abs();
  const double m = static_cast<double>(e.size());
  return {e.sum() / m, std::sqrt(e.square().sum() / m), e.maxCoeff()};
}

Eigen::ArrayXd sample_nodes(const ProblemSpec& problem, const Eigen::ArrayXXd& state, Eigen::ArrayXd* abscissae) {
  const int n = problem.x.n_cells;
  const bool image = problem.x.centering == Centering::Node && problem.bc[Side::Left] == BoundaryKind::Periodic;
  const int m = image ? n + 1 : n;
  Eigen::ArrayXd values(m);
  values.head(n) = state.row(0).transpose();
  if (image) values(n) = state(0, 0);
  if (abscissae) {
    abscissae->resize(m);
    for (int i = 0; i < m; ++i) (*abscissae)(i) = problem.x.x(i);
  }
  return values;
}

std::vector<ErrorReport> convergence_table(const ProblemSpec& problem, const SchemeSpec& scheme,
                                           const std::vector<int>& resolutions, const ExactSolution& exact) {
  std::vector<ErrorReport> rows;
  for (int n : resolutions) {
    const ProblemSpec p = problem.with_resolution(n);
    const AdvanceResult run = advance(p, scheme);
    Eigen::ArrayXd x;
    const Eigen::ArrayXd u = sample_nodes(p, run.state, &x);
    const Eigen::ArrayXd ue = x.unaryExpr([&](double xi) { return exact(xi, run.t); });

    ErrorReport row;
    row.n = n;
    row.error = error_norms(u, ue);
    if (!rows.empty()) {
      const NormTriple& prev = rows.back().error;
      const double r = std::log2(static_cast<double>(n) / rows.back().n);
      row.order = NormTriple{std::log2(prev.l1 / row.error.l1) / r, std::log2(prev.l2 / row.error.l2) / r,
                             std::log2(prev.linf / row.error.linf) / r};
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace weno::bench
