#include "weno/evolve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace weno {

namespace {

template <int M>
using Vec = Eigen::Matrix<double, M, 1>;
template <int M>
using Line = Eigen::Matrix<double, M, Eigen::Dynamic>;

// Flux and eigensystem for one model along one direction.
struct AdvectionLine {
  static constexpr int M = 1;
  static constexpr bool characteristic = false;
  double a;
  Vec<1> flux(const Vec<1>& u) const { return Vec<1>(a * u(0)); }
  Eigensystem<double, 1> eigensystem(const Vec<1>&) const { return {}; }
};

struct BurgersLine {
  static constexpr int M = 1;
  static constexpr bool characteristic = false;
  Vec<1> flux(const Vec<1>& u) const { return Vec<1>(0.5 * u(0) * u(0)); }
  Eigensystem<double, 1> eigensystem(const Vec<1>&) const { return {}; }
};

struct Euler1DLine {
  static constexpr int M = 3;
  static constexpr bool characteristic = true;
  double gamma;
  Vec<3> flux(const Vec<3>& U) const { return euler::flux(U, gamma); }
  Eigensystem<double, 3> eigensystem(const Vec<3>& U) const { return euler::eigensystem(U, gamma); }
};

struct Euler2DLine {
  static constexpr int M = 4;
  static constexpr bool characteristic = true;
  double gamma;
  Axis axis;
  Vec<4> flux(const Vec<4>& U) const { return euler::flux(U, axis, gamma); }
  Eigensystem<double, 4> eigensystem(const Vec<4>& U) const { return euler::eigensystem(U, axis, gamma); }
};

// Numerical fluxes at the n + 1 interfaces of a line of n cells padded by g ghosts
// on each side. `u` holds M x (n + 2g) values; column s of `out` is the flux at
// the left face of cell s (interface index s - 1 in the +1/2 convention).
template <WeightFamily Family, class Model>
void line_fluxes(const Model& model, const Eigen::Ref<const Line<Model::M>>& u, int n, int g, double alpha,
                 const SchemeSpec& scheme, Line<Model::M>& out, const WeightSink* sink) {
  const double eps = scheme.eps;
  const double p = scheme.p;
  constexpr int M = Model::M;
  const int len = n + 2 * g;
  Line<M> f(M, len);
  for (int c = 0; c < len; ++c) f.col(c) = model.flux(u.col(c));

  out.resize(M, n + 1);
  WeightTriple<double> omega;
  WeightTriple<double>* omega_out = sink ? &omega : nullptr;
  Eigen::Matrix<double, M, 6> plus, minus;
  Eigen::Matrix<double, M, M> right;

  for (int s = 0; s <= n; ++s) {
    const int c0 = s + g - 3;  // first of the six cells i-2 .. i+3
    if constexpr (Model::characteristic) {
      const Vec<M> avg = 0.5 * (u.col(c0 + 2) + u.col(c0 + 3));
      const auto es = model.eigensystem(avg);
      right = es.right;
      const Eigen::Matrix<double, M, 6> wf = es.left * f.template middleCols<6>(c0);
      const Eigen::Matrix<double, M, 6> wu = es.left * u.template middleCols<6>(c0);
      plus = 0.5 * (wf + alpha * wu);
      minus = 0.5 * (wf - alpha * wu);
    } else {
      plus = 0.5 * (f.template middleCols<6>(c0) + alpha * u.template middleCols<6>(c0));
      minus = 0.5 * (f.template middleCols<6>(c0) - alpha * u.template middleCols<6>(c0));
    }
    Vec<M> hat;
    for (int k = 0; k < M; ++k) {
      const StencilWindow<double> wp = plus.row(k).template segment<5>(0).transpose();
      const StencilWindow<double> wm = minus.row(k).template segment<5>(1).transpose();
      const double fp = weno_interface_flux<Family>(wp, eps, p, Bias::Left, omega_out);
      if (sink) (*sink)(InterfaceWeights{s - 1, k, Bias::Left, omega});
      const double fm = weno_interface_flux<Family>(wm, eps, p, Bias::Right, omega_out);
      if (sink) (*sink)(InterfaceWeights{s - 1, k, Bias::Right, omega});
      hat(k) = fp + fm;
    }
    if constexpr (Model::characteristic) {
      out.col(s) = right * hat;
    } else {
      out.col(s) = hat;
    }
  }
}

template <class Model>
void line_fluxes(const Model& model, const Eigen::Ref<const Line<Model::M>>& u, int n, int g, double alpha,
                 const SchemeSpec& scheme, Line<Model::M>& out, const WeightSink* sink) {
  with_family(scheme.family, [&](auto family) {
    line_fluxes<decltype(family)::value>(model, u, n, g, alpha, scheme, out, sink);
  });
}

// Global splitting speed; a non-physical cell is reported by interior index, or as
// a ghost cell with its (possibly negative) grid coordinates.
double checked_wave_speed(const ModelSpec& model, const Eigen::ArrayXXd& data, Axis axis, double t,
                          const std::function<std::pair<std::string, long>(long)>& locate) {
  try {
    return max_wave_speed(model, data, axis);
  } catch (const NonPhysicalState& e) {
    const auto [where, cell] = locate(e.cell());
    throw NonPhysicalState("non-physical state in " + where + " at t = " + std::to_string(t), cell, t);
  }
}

template <class Model>
Eigen::ArrayXXd operator_1d(const Model& line_model, const Eigen::ArrayXXd& u, const Grid1D& grid,
                            const BoundarySpec& bc, const ModelSpec& model, const SchemeSpec& scheme, double t,
                            const WeightSink* sink) {
  constexpr int M = Model::M;
  if (u.rows() != M || u.cols() != grid.n_cells) throw std::invalid_argument("spatial operator: state shape mismatch");
  const int g = grid.n_ghost;
  Field1D field = Field1D::from_interior(u, g);
  fill_ghosts(field, grid, bc, t);
  const double alpha =
      checked_wave_speed(model, field.data, Axis::X, t, [&](long c) {
        const long i = c - g;
        const bool inside = i >= 0 && i < grid.n_cells;
        return std::pair{(inside ? "cell " : "ghost cell ") + std::to_string(i), inside ? i : -1L};
      });

  Line<M> fluxes;
  const Eigen::Map<const Line<M>> line(field.data.data(), M, field.data.cols());
  line_fluxes(line_model, line, grid.n_cells, g, alpha, scheme, fluxes, sink);

  Eigen::ArrayXXd L(M, grid.n_cells);
  for (int i = 0; i < grid.n_cells; ++i) L.col(i) = -(fluxes.col(i + 1) - fluxes.col(i)).array() / grid.dx;
  return L;
}

void accumulate_axis(const Field2D& field, const Grid2D& grid, const ModelSpec& model, const SchemeSpec& scheme,
                     double t, Axis axis, Eigen::ArrayXXd& L) {
  constexpr int M = 4;
  const int g = field.n_ghost;
  const int nx = field.nx;
  const int ny = field.ny;
  const long stride = field.stride();
  const double alpha = checked_wave_speed(model, field.data, axis, t, [&](long c) {
    const long i = c % stride - g;
    const long j = c / stride - g;
    const bool inside = i >= 0 && i < nx && j >= 0 && j < ny;
    return std::pair{std::string(inside ? "cell" : "ghost cell") + " (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                     inside ? j * nx + i : -1L};
  });
  const Euler2DLine line_model{model.gamma, axis};
  Line<M> fluxes;

  if (axis == Axis::X) {
    for (int j = 0; j < ny; ++j) {
      const Eigen::Map<const Line<M>> line(field.data.data() + static_cast<long>(M) * field.column(-g, j), M,
                                           nx + 2 * g);
      line_fluxes(line_model, line, nx, g, alpha, scheme, fluxes, nullptr);
      for (int i = 0; i < nx; ++i)
        L.col(static_cast<long>(j) * nx + i) -= (fluxes.col(i + 1) - fluxes.col(i)).array() / grid.x.dx;
    }
  } else {
    Line<M> buffer(M, ny + 2 * g);
    for (int i = 0; i < nx; ++i) {
      for (int j = -g; j < ny + g; ++j) buffer.col(j + g) = field.data.col(field.column(i, j)).matrix();
      line_fluxes(line_model, buffer, ny, g, alpha, scheme, fluxes, nullptr);
      for (int j = 0; j < ny; ++j)
        L.col(static_cast<long>(j) * nx + i) -= (fluxes.col(j + 1) - fluxes.col(j)).array() / grid.y.dx;
    }
  }
}

Field2D ghosted_2d(const Eigen::ArrayXXd& u, const Grid2D& grid, const BoundarySpec& bc, const ModelSpec& model,
                   double t) {
  if (model.kind != ModelKind::Euler2D) throw std::invalid_argument("spatial_operator_2d: model must be 2D Euler");
  if (u.rows() != 4 || u.cols() != static_cast<long>(grid.x.n_cells) * grid.y.n_cells)
    throw std::invalid_argument("spatial_operator_2d: state shape mismatch");
  Field2D field = Field2D::from_interior(u, grid.x.n_cells, grid.y.n_cells, grid.x.n_ghost);
  fill_ghosts(field, grid, bc, t);
  return field;
}

}  // namespace

Eigen::ArrayXXd spatial_operator_scalar(const Eigen::ArrayXXd& u, const Grid1D& grid, const BoundarySpec& bc,
                                        const ModelSpec& model, const SchemeSpec& scheme, double t,
                                        const WeightSink* sink) {
  switch (model.kind) {
    case ModelKind::Advection: return operator_1d(AdvectionLine{model.speed}, u, grid, bc, model, scheme, t, sink);
    case ModelKind::Burgers: return operator_1d(BurgersLine{}, u, grid, bc, model, scheme, t, sink);
    default: throw std::invalid_argument("spatial_operator_scalar: model is not scalar");
  }
}

Eigen::ArrayXXd spatial_operator_system(const Eigen::ArrayXXd& u, const Grid1D& grid, const BoundarySpec& bc,
                                        const ModelSpec& model, const SchemeSpec& scheme, double t,
                                        const WeightSink* sink) {
  if (model.kind != ModelKind::Euler1D) throw std::invalid_argument("spatial_operator_system: model must be 1D Euler");
  return operator_1d(Euler1DLine{model.gamma}, u, grid, bc, model, scheme, t, sink);
}

Eigen::ArrayXXd spatial_operator_2d_axis(const Eigen::ArrayXXd& u, const Grid2D& grid, const BoundarySpec& bc,
                                         const ModelSpec& model, const SchemeSpec& scheme, double t, Axis axis) {
  const Field2D field = ghosted_2d(u, grid, bc, model, t);
  Eigen::ArrayXXd L = Eigen::ArrayXXd::Zero(4, u.cols());
  accumulate_axis(field, grid, model, scheme, t, axis, L);
  return L;
}

Eigen::ArrayXXd spatial_operator_2d(const Eigen::ArrayXXd& u, const Grid2D& grid, const BoundarySpec& bc,
                                    const ModelSpec& model, const SchemeSpec& scheme, double t) {
  const Field2D field = ghosted_2d(u, grid, bc, model, t);
  Eigen::ArrayXXd L = Eigen::ArrayXXd::Zero(4, u.cols());
  accumulate_axis(field, grid, model, scheme, t, Axis::X, L);
  accumulate_axis(field, grid, model, scheme, t, Axis::Y, L);
  return L;
}

Eigen::ArrayXXd spatial_operator(const ProblemSpec& problem, const SchemeSpec& scheme, const Eigen::ArrayXXd& u,
                                 double t, const WeightSink* sink) {
  switch (problem.model.kind) {
    case ModelKind::Advection:
    case ModelKind::Burgers: return spatial_operator_scalar(u, problem.x, problem.bc, problem.model, scheme, t, sink);
    case ModelKind::Euler1D: return spatial_operator_system(u, problem.x, problem.bc, problem.model, scheme, t, sink);
    case ModelKind::Euler2D:
      if (!problem.y) throw std::invalid_argument("spatial_operator: 2D model without a y grid");
      return spatial_operator_2d(u, problem.grid_2d(), problem.bc, problem.model, scheme, t);
  }
  throw std::invalid_argument("spatial_operator: unknown model");
}

namespace {

void check_state(const ModelSpec& model, const Eigen::ArrayXXd& u, long step, double t) {
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    if (!u.col(c).allFinite())
      throw std::runtime_error("non-finite value at cell " + std::to_string(c) + " after step " +
                               std::to_string(step) + " (t = " + std::to_string(t) + ")");
    if (model.is_system()) {
      const double rho = u(0, c);
      const int e = static_cast<int>(u.rows()) - 1;
      double kinetic = 0.0;
      for (int k = 1; k < e; ++k) kinetic += u(k, c) * u(k, c);
      const double P = (model.gamma - 1) * (u(e, c) - 0.5 * kinetic / rho);
      if (!(rho > 0) || !(P > 0)) throw NonPhysicalState("non-positive density or pressure", c, t);
    }
  }
}

}  // namespace

AdvanceResult advance(const ProblemSpec& problem, const SchemeSpec& scheme, const AdvanceOptions& options) {
  scheme.validate();
  problem.bc.validate();
  const double T = options.final_time.value_or(problem.final_time);
  if (!(T >= 0.0)) throw std::invalid_argument("advance: final time must be non-negative");

  TimeStepRule rule = problem.dt_rule;
  if (options.dt_coefficient) rule.c = *options.dt_coefficient;
  const double dt = problem.y ? rule.dt(problem.x, &*problem.y) : rule.dt(problem.x);

  AdvanceResult result;
  result.state = problem.initial_state();
  result.dt = dt;
  check_state(problem.model, result.state, 0, 0.0);
  if (options.on_step) options.on_step(0, 0.0, result.state);
  if (T == 0.0) return result;

  const long n_steps = std::max(1L, static_cast<long>(std::ceil(T / dt - 1e-9)));
  const WeightSink* weights = options.on_weights ? &options.on_weights : nullptr;

  for (long step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * dt;
    const double h = step + 1 == n_steps ? T - t : dt;
    int stage = 0;
    auto L = [&](const Eigen::ArrayXXd& v, double ts) {
      const WeightSink* sink = (stage++ == 0 && step == options.weights_step) ? weights : nullptr;
      return spatial_operator(problem, scheme, v, ts, sink);
    };
    result.state = rk3_step(result.state, h, L, t);
    result.t = step + 1 == n_steps ? T : t + h;
    result.steps = step + 1;
    check_state(problem.model, result.state, step + 1, result.t);
    if (options.on_step) options.on_step(step + 1, result.t, result.state);
  }
  return result;
}

}  // namespace weno
