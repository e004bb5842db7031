// Flux functions, variable transforms, wave speeds, Lax-Friedrichs splitting and
// Euler eigensystems.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace weno {

enum class ModelKind { Advection, Burgers, Euler1D, Euler2D };
enum class Axis { X, Y };

struct ModelSpec {
  ModelKind kind = ModelKind::Advection;
  double speed = 1.0;  // advection speed
  double gamma = 1.4;

  static ModelSpec advection(double a = 1.0) { return {ModelKind::Advection, a, 1.4}; }
  static ModelSpec burgers() { return {ModelKind::Burgers, 1.0, 1.4}; }
  static ModelSpec euler_1d(double gamma = 1.4) { return {ModelKind::Euler1D, 1.0, gamma}; }
  static ModelSpec euler_2d(double gamma = 1.4) { return {ModelKind::Euler2D, 1.0, gamma}; }

  int components() const;
  int dimension() const { return kind == ModelKind::Euler2D ? 2 : 1; }
  bool is_system() const { return kind == ModelKind::Euler1D || kind == ModelKind::Euler2D; }
};

/// Raised on rho <= 0 or P <= 0; carries the offending cell (-1 if unknown) and time.
class NonPhysicalState : public std::runtime_error {
 public:
  NonPhysicalState(const std::string& what, long cell = -1, double time = 0.0);
  long cell() const { return cell_; }
  double time() const { return time_; }

 private:
  long cell_;
  double time_;
};

template <typename Scalar, int M>
struct Eigensystem {
  Eigen::Matrix<Scalar, M, M> left;   // rows: left eigenvectors
  Eigen::Matrix<Scalar, M, M> right;  // columns: right eigenvectors
  Eigen::Matrix<Scalar, M, 1> eigenvalues;
};

namespace euler {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar>
Scalar pressure(const Vec3<Scalar>& U, Scalar gamma) {
  return (gamma - 1) * (U(2) - Scalar(0.5) * U(1) * U(1) / U(0));
}

template <typename Scalar>
Scalar pressure(const Vec4<Scalar>& U, Scalar gamma) {
  return (gamma - 1) * (U(3) - Scalar(0.5) * (U(1) * U(1) + U(2) * U(2)) / U(0));
}

template <typename Scalar>
Vec3<Scalar> flux(const Vec3<Scalar>& U, Scalar gamma) {
  const Scalar u = U(1) / U(0);
  const Scalar P = pressure(U, gamma);
  return Vec3<Scalar>(U(1), U(1) * u + P, u * (U(2) + P));
}

/// F for Axis::X, G for Axis::Y.
template <typename Scalar>
Vec4<Scalar> flux(const Vec4<Scalar>& U, Axis axis, Scalar gamma) {
  const Scalar P = pressure(U, gamma);
  if (axis == Axis::X) {
    const Scalar u = U(1) / U(0);
    return Vec4<Scalar>(U(1), U(1) * u + P, U(2) * u, u * (U(3) + P));
  }
  const Scalar v = U(2) / U(0);
  return Vec4<Scalar>(U(2), U(1) * v, U(2) * v + P, v * (U(3) + P));
}

/// Eigenvectors of dF/dU ordered by eigenvalue (u - c, u, u + c).
template <typename Scalar>
Eigensystem<Scalar, 3> eigensystem(const Vec3<Scalar>& U, Scalar gamma) {
  using std::sqrt;
  const Scalar rho = U(0);
  const Scalar u = U(1) / rho;
  const Scalar P = pressure(U, gamma);
  if (!(rho > 0) || !(P > 0)) throw NonPhysicalState("euler eigensystem: non-physical average state");
  const Scalar c = sqrt(gamma * P / rho);
  const Scalar H = (U(2) + P) / rho;
  const Scalar b1 = (gamma - 1) / (c * c);
  const Scalar b2 = Scalar(0.5) * b1 * u * u;

  Eigensystem<Scalar, 3> es;
  es.right << 1, 1, 1,
              u - c, u, u + c,
              H - u * c, Scalar(0.5) * u * u, H + u * c;
  es.left << Scalar(0.5) * (b2 + u / c), Scalar(-0.5) * (b1 * u + 1 / c), Scalar(0.5) * b1,
             1 - b2, b1 * u, -b1,
             Scalar(0.5) * (b2 - u / c), Scalar(-0.5) * (b1 * u - 1 / c), Scalar(0.5) * b1;
  es.eigenvalues << u - c, u, u + c;
  return es;
}

/// Directional eigensystem ordered (un - c, un, un, un + c); the third field is the
/// passively advected tangential velocity.
template <typename Scalar>
Eigensystem<Scalar, 4> eigensystem(const Vec4<Scalar>& U, Axis axis, Scalar gamma) {
  using std::sqrt;
  // Relabel to x-normal form, build, then swap the momentum rows/columns back.
  Vec4<Scalar> V = U;
  if (axis == Axis::Y) std::swap(V(1), V(2));

  const Scalar rho = V(0);
  const Scalar u = V(1) / rho;
  const Scalar v = V(2) / rho;
  const Scalar P = pressure(V, gamma);
  if (!(rho > 0) || !(P > 0)) throw NonPhysicalState("euler eigensystem: non-physical average state");
  const Scalar c = sqrt(gamma * P / rho);
  const Scalar H = (V(3) + P) / rho;
  const Scalar q2 = u * u + v * v;
  const Scalar b1 = (gamma - 1) / (c * c);
  const Scalar b2 = Scalar(0.5) * b1 * q2;

  Eigensystem<Scalar, 4> es;
  es.right << 1, 1, 0, 1,
              u - c, u, 0, u + c,
              v, v, 1, v,
              H - u * c, Scalar(0.5) * q2, v, H + u * c;
  es.left << Scalar(0.5) * (b2 + u / c), Scalar(-0.5) * (b1 * u + 1 / c), Scalar(-0.5) * b1 * v, Scalar(0.5) * b1,
             1 - b2, b1 * u, b1 * v, -b1,
             -v, 0, 1, 0,
             Scalar(0.5) * (b2 - u / c), Scalar(-0.5) * (b1 * u - 1 / c), Scalar(-0.5) * b1 * v, Scalar(0.5) * b1;
  es.eigenvalues << u - c, u, u, u + c;

  if (axis == Axis::Y) {
    es.right.row(1).swap(es.right.row(2));
    es.left.col(1).swap(es.left.col(2));
  }
  return es;
}

}  // namespace euler

/// f+ = (f + alpha u)/2, f- = (f - alpha u)/2; works for scalars and Eigen vectors.
template <typename T>
std::pair<T, T> lf_split(const T& f, const T& u, double alpha) {
  return {T(0.5 * (f + alpha * u)), T(0.5 * (f - alpha * u))};
}

// Dynamically sized entry points.

/// Physical flux of one state in direction `axis`.
Eigen::VectorXd flux(const ModelSpec& model, const Eigen::VectorXd& state, Axis axis = Axis::X);

/// Primitive (rho, u[, v], P) to conserved (rho, rho u[, rho v], E), and back.
/// Scalar models pass through unchanged.
Eigen::VectorXd prim_to_cons(const ModelSpec& model, const Eigen::VectorXd& prim);
Eigen::VectorXd cons_to_prim(const ModelSpec& model, const Eigen::VectorXd& cons);

/// Largest |f'(u)| (scalar) or |u_n| + c (Euler) over the columns of `field`.
double max_wave_speed(const ModelSpec& model, const Eigen::Ref<const Eigen::ArrayXXd>& field, Axis axis = Axis::X);

/// Left/right eigenvectors of the Euler flux Jacobian at `state_avg`.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> euler_eigensystem(const ModelSpec& model,
                                                              const Eigen::VectorXd& state_avg,
                                                              Axis axis = Axis::X);

}  // namespace weno
