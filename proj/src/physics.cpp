#include "weno/physics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "weno/weights.hpp"

namespace weno {

std::string_view family_name(WeightFamily family) {
  switch (family) {
    case WeightFamily::Linear: return "linear";
    case WeightFamily::JS: return "js";
    case WeightFamily::M: return "m";
    case WeightFamily::Z: return "z";
    case WeightFamily::ZR: return "zr";
  }
  return "unknown";
}

WeightFamily parse_family(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.rfind("weno-", 0) == 0) s = s.substr(5);
  if (s == "linear") return WeightFamily::Linear;
  if (s == "js") return WeightFamily::JS;
  if (s == "m") return WeightFamily::M;
  if (s == "z") return WeightFamily::Z;
  if (s == "zr") return WeightFamily::ZR;
  throw std::invalid_argument("unknown weight family '" + std::string(text) + "'");
}

int ModelSpec::components() const {
  switch (kind) {
    case ModelKind::Advection:
    case ModelKind::Burgers: return 1;
    case ModelKind::Euler1D: return 3;
    case ModelKind::Euler2D: return 4;
  }
  throw std::invalid_argument("ModelSpec: unknown model kind");
}

namespace {

std::string describe(const char* what, long cell, double time) {
  std::ostringstream os;
  os << what;
  if (cell >= 0) os << " (cell " << cell << ", t = " << time << ")";
  return os.str();
}

void check_size(const ModelSpec& model, const Eigen::VectorXd& v) {
  if (v.size() != model.components()) throw std::invalid_argument("state size does not match model");
}

}  // namespace

NonPhysicalState::NonPhysicalState(const std::string& what, long cell, double time)
    : std::runtime_error(describe(what.c_str(), cell, time)), cell_(cell), time_(time) {}

Eigen::VectorXd flux(const ModelSpec& model, const Eigen::VectorXd& state, Axis axis) {
  check_size(model, state);
  switch (model.kind) {
    case ModelKind::Advection: return Eigen::VectorXd::Constant(1, model.speed * state(0));
    case ModelKind::Burgers: return Eigen::VectorXd::Constant(1, 0.5 * state(0) * state(0));
    case ModelKind::Euler1D: {
      const euler::Vec3<double> U = state;
      if (!(U(0) > 0) || !(euler::pressure(U, model.gamma) > 0)) throw NonPhysicalState("flux: non-physical state");
      return euler::flux(U, model.gamma);
    }
    case ModelKind::Euler2D: {
      const euler::Vec4<double> U = state;
      if (!(U(0) > 0) || !(euler::pressure(U, model.gamma) > 0)) throw NonPhysicalState("flux: non-physical state");
      return euler::flux(U, axis, model.gamma);
    }
  }
  throw std::invalid_argument("flux: unknown model");
}

Eigen::VectorXd prim_to_cons(const ModelSpec& model, const Eigen::VectorXd& prim) {
  check_size(model, prim);
  if (!model.is_system()) return prim;
  const double rho = prim(0);
  const double P = prim(prim.size() - 1);
  if (!(rho > 0) || !(P > 0)) throw NonPhysicalState("prim_to_cons: non-physical input");
  Eigen::VectorXd U(prim.size());
  U(0) = rho;
  double kinetic = 0.0;
  for (Eigen::Index k = 1; k + 1 < prim.size(); ++k) {
    U(k) = rho * prim(k);
    kinetic += prim(k) * prim(k);
  }
  U(prim.size() - 1) = P / (model.gamma - 1) + 0.5 * rho * kinetic;
  return U;
}

Eigen::VectorXd cons_to_prim(const ModelSpec& model, const Eigen::VectorXd& cons) {
  check_size(model, cons);
  if (!model.is_system()) return cons;
  const double rho = cons(0);
  if (!(rho > 0)) throw NonPhysicalState("cons_to_prim: non-positive density");
  Eigen::VectorXd W(cons.size());
  W(0) = rho;
  double kinetic = 0.0;
  for (Eigen::Index k = 1; k + 1 < cons.size(); ++k) {
    W(k) = cons(k) / rho;
    kinetic += cons(k) * W(k);
  }
  const double P = (model.gamma - 1) * (cons(cons.size() - 1) - 0.5 * kinetic);
  if (!(P > 0)) throw NonPhysicalState("cons_to_prim: non-positive pressure");
  W(cons.size() - 1) = P;
  return W;
}

double max_wave_speed(const ModelSpec& model, const Eigen::Ref<const Eigen::ArrayXXd>& field, Axis axis) {
  switch (model.kind) {
    case ModelKind::Advection: return std::abs(model.speed);
    case ModelKind::Burgers: return field.row(0).abs().maxCoeff();
    case ModelKind::Euler1D:
    case ModelKind::Euler2D: {
      const int normal = (model.kind == ModelKind::Euler2D && axis == Axis::Y) ? 2 : 1;
      const int energy = static_cast<int>(field.rows()) - 1;
      double alpha = 0.0;
      for (Eigen::Index j = 0; j < field.cols(); ++j) {
        const double rho = field(0, j);
        double kinetic = 0.0;
        for (int k = 1; k < energy; ++k) kinetic += field(k, j) * field(k, j);
        const double P = (model.gamma - 1) * (field(energy, j) - 0.5 * kinetic / rho);
        if (!(rho > 0) || !(P > 0)) throw NonPhysicalState("max_wave_speed: non-physical cell", static_cast<long>(j));
        alpha = std::max(alpha, std::abs(field(normal, j) / rho) + std::sqrt(model.gamma * P / rho));
      }
      return alpha;
    }
  }
  throw std::invalid_argument("max_wave_speed: unknown model");
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> euler_eigensystem(const ModelSpec& model,
                                                              const Eigen::VectorXd& state_avg, Axis axis) {
  check_size(model, state_avg);
  if (model.kind == ModelKind::Euler1D) {
    const auto es = euler::eigensystem(euler::Vec3<double>(state_avg), model.gamma);
    return {es.left, es.right};
  }
  if (model.kind == ModelKind::Euler2D) {
    const auto es = euler::eigensystem(euler::Vec4<double>(state_avg), axis, model.gamma);
    return {es.left, es.right};
  }
  throw std::invalid_argument("euler_eigensystem: model is not an Euler system");
}

}  // namespace weno
