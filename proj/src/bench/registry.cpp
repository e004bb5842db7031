#include "weno/bench/registry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weno::bench {

namespace {

using std::numbers::pi;

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }

Eigen::VectorXd prim1d(double rho, double u, double P) {
  return prim_to_cons(ModelSpec::euler_1d(), Eigen::Vector3d(rho, u, P));
}

Eigen::VectorXd prim2d(double rho, double u, double v, double P) {
  return prim_to_cons(ModelSpec::euler_2d(), Eigen::Vector4d(rho, u, v, P));
}

ProblemSpec advection() {
  ProblemSpec p;
  p.name = "advection";
  p.model = ModelSpec::advection(1.0);
  p.x = build_grid(-1, 1, 10, Centering::Node);
  p.initial = [](double x, double) { return scalar(std::sin(pi * x)); };
  p.bc = BoundarySpec::uniform(BoundaryKind::Periodic);
  p.final_time = 2.0;
  p.dt_rule = {TimeStepKind::DtEqCDxPow, 0.4};
  p.resolutions = {10, 20, 40, 80, 160, 320};
  p.reference = ReferenceKind::ClosedForm;
  return p;
}

ProblemSpec advection_jump() {
  ProblemSpec p;
  p.name = "advection-jump";
  p.model = ModelSpec::advection(1.0);
  p.x = build_grid(-1, 1, 200, Centering::Cell);
  p.initial = [](double x, double) {
    const double smooth = -std::sin(pi * x) - 0.5 * x * x * x;
    return scalar(x < 0 ? smooth : smooth + 1.0);
  };
  p.bc = BoundarySpec::uniform(BoundaryKind::Periodic);
  p.final_time = 2.0;
  p.dt_rule = {TimeStepKind::DtEqCDxPow, 0.4};
  p.resolutions = {200};
  return p;
}

ProblemSpec burgers() {
  ProblemSpec p;
  p.name = "burgers";
  p.model = ModelSpec::burgers();
  p.x = build_grid(-1, 1, 40, Centering::Cell);
  p.initial = [](double x, double) { return scalar(x <= 0 ? 1.0 : 0.0); };
  p.bc = BoundarySpec::uniform(BoundaryKind::ZeroGradient);
  p.final_time = 1.0;
  p.dt_rule = {TimeStepKind::DtEqCDx, 0.4};
  p.resolutions = {40};
  p.reference = ReferenceKind::ClosedForm;
  return p;
}

ProblemSpec shock_tube(const std::string& name, Primitive1D l, Primitive1D r, double T) {
  ProblemSpec p;
  p.name = name;
  p.model = ModelSpec::euler_1d();
  p.x = build_grid(-5, 5, 200, Centering::Cell);
  p.initial = [l, r](double x, double) { return x <= 0 ? prim1d(l.rho, l.u, l.p) : prim1d(r.rho, r.u, r.p); };
  p.bc = BoundarySpec::uniform(BoundaryKind::ZeroGradient);
  p.final_time = T;
  p.dt_rule = {TimeStepKind::DtEqCDx, 0.2};
  p.resolutions = {200};
  p.reference = ReferenceKind::ExactRiemann;
  return p;
}

ProblemSpec shock_entropy(int k) {
  ProblemSpec p;
  p.name = k == 5 ? "shock-entropy" : "shock-entropy-k10";
  p.model = ModelSpec::euler_1d();
  p.resolutions = k == 5 ? std::vector<int>{200} : std::vector<int>{500, 400};
  p.x = build_grid(-5, 5, p.resolutions.front(), Centering::Cell);
  p.initial = [k](double x, double) {
    return x < -4 ? prim1d(3.857143, 2.629369, 10.333333) : prim1d(1 + 0.2 * std::sin(k * x), 0, 1);
  };
  p.bc = BoundarySpec::uniform(BoundaryKind::ZeroGradient);
  p.final_time = 2.0;
  p.dt_rule = {TimeStepKind::DtEqCDx, 0.05};
  p.reference = ReferenceKind::HighresM2000;
  return p;
}

ProblemSpec riemann2d() {
  ProblemSpec p;
  p.name = "riemann2d";
  p.model = ModelSpec::euler_2d();
  const Grid2D g = build_grid_2d(0, 1, 200, 0, 1, 200);
  p.x = g.x;
  p.y = g.y;
  p.initial = [](double x, double y) {
    if (x > 0.8 && y > 0.8) return prim2d(1.5, 0, 0, 1.5);
    if (x < 0.8 && y > 0.8) return prim2d(0.5323, 1.206, 0, 0.3);
    if (x < 0.8 && y < 0.8) return prim2d(0.138, 1.206, 1.206, 0.029);
    return prim2d(0.5323, 0, 1.206, 0.3);
  };
  p.bc = BoundarySpec::uniform(BoundaryKind::ZeroGradient);
  p.final_time = 0.8;
  p.dt_rule = {TimeStepKind::DtEqCMinDxDy, 0.2};
  p.resolutions = {200};
  return p;
}

ProblemSpec dmr() {
  ProblemSpec p;
  p.name = "dmr";
  p.model = ModelSpec::euler_2d();
  const Grid2D g = build_grid_2d(0, 4, 480, 0, 1, 119);
  p.x = g.x;
  p.y = g.y;
  const double theta = pi / 6;
  DmrParameters shock;
  shock.post_shock = prim2d(8, 8.25 * std::cos(theta), -8.25 * std::sin(theta), 116.5);
  shock.pre_shock = prim2d(1.4, 0, 0, 1);
  p.initial = [shock](double x, double y) { return x < shock.shock_x(0.0, y) ? shock.post_shock : shock.pre_shock; };
  p.bc.kind = {BoundaryKind::ZeroGradient, BoundaryKind::ZeroGradient, BoundaryKind::DmrBottom, BoundaryKind::DmrTop};
  p.bc.dmr = shock;
  p.final_time = 0.2;
  p.dt_rule = {TimeStepKind::DtEqCMinDxDy, 0.005};
  p.resolutions = {480};
  return p;
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"advection", "advection-jump", "burgers",   "sod", "lax", "123", "shock-entropy", "shock-entropy-k10",
          "riemann2d", "dmr"};
}

ProblemSpec make_problem(std::string_view name) {
  if (name == "advection") return advection();
  if (name == "advection-jump") return advection_jump();
  if (name == "burgers") return burgers();
  if (name == "sod") return shock_tube("sod", {1, 0, 1}, {0.125, 0, 0.1}, 2.0);
  if (name == "lax") return shock_tube("lax", {0.445, 0.698, 3.528}, {0.5, 0, 0.571}, 1.3);
  if (name == "123") return shock_tube("123", {1, -2, 0.4}, {1, 2, 0.4}, 1.0);
  if (name == "shock-entropy") return shock_entropy(5);
  if (name == "shock-entropy-k10") return shock_entropy(10);
  if (name == "riemann2d") return riemann2d();
  if (name == "dmr") return dmr();
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

std::optional<ExactSolution> closed_form_exact(const ProblemSpec& problem) {
  if (problem.name == "advection") return ExactSolution(advection_exact);
  if (problem.name == "burgers") return ExactSolution(burgers_shock_exact);
  return std::nullopt;
}

std::optional<std::pair<Primitive1D, Primitive1D>> riemann_data(const ProblemSpec& problem) {
  if (problem.name == "sod") return std::pair{Primitive1D{1, 0, 1}, Primitive1D{0.125, 0, 0.1}};
  if (problem.name == "lax") return std::pair{Primitive1D{0.445, 0.698, 3.528}, Primitive1D{0.5, 0, 0.571}};
  if (problem.name == "123") return std::pair{Primitive1D{1, -2, 0.4}, Primitive1D{1, 2, 0.4}};
  return std::nullopt;
}

}  // namespace weno::bench
