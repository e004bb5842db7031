#include "weno/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weno/evolve.hpp"

namespace weno {

double advection_exact(double x, double t) { return std::sin(std::numbers::pi * (x - t)); }

double burgers_shock_exact(double x, double t) { return x <= 0.5 * t ? 1.0 : 0.0; }

namespace {

double sound_speed(const Primitive1D& w, double gamma) { return std::sqrt(gamma * w.p / w.rho); }

// Pressure function of one side and its derivative.
std::pair<double, double> side_function(double p, const Primitive1D& w, double gamma) {
  const double c = sound_speed(w, gamma);
  if (p > w.p) {
    const double A = 2.0 / ((gamma + 1) * w.rho);
    const double B = (gamma - 1) / (gamma + 1) * w.p;
    const double s = std::sqrt(A / (p + B));
    return {(p - w.p) * s, s * (1.0 - 0.5 * (p - w.p) / (p + B))};
  }
  const double ratio = p / w.p;
  const double e = (gamma - 1) / (2 * gamma);
  return {2 * c / (gamma - 1) * (std::pow(ratio, e) - 1.0), std::pow(ratio, -(gamma + 1) / (2 * gamma)) / (w.rho * c)};
}

void check_physical(const Primitive1D& w) {
  if (!(w.rho > 0) || !(w.p > 0) || !std::isfinite(w.u))
    throw std::invalid_argument("solve_riemann_euler: non-physical input state");
}

}  // namespace

double RiemannFan::pressure_function(double p) const {
  return side_function(p, left, gamma).first + side_function(p, right, gamma).first + (right.u - left.u);
}

RiemannFan solve_riemann_euler(const Primitive1D& left, const Primitive1D& right, double gamma) {
  check_physical(left);
  check_physical(right);
  RiemannFan fan;
  fan.left = left;
  fan.right = right;
  fan.gamma = gamma;

  const double cl = sound_speed(left, gamma);
  const double cr = sound_speed(right, gamma);
  if (2 * (cl + cr) / (gamma - 1) <= right.u - left.u)
    throw std::domain_error("solve_riemann_euler: data generate vacuum");

  const auto f = [&](double p) {
    const auto [fl, dl] = side_function(p, left, gamma);
    const auto [fr, dr] = side_function(p, right, gamma);
    return std::pair{fl + fr + right.u - left.u, dl + dr};
  };

  // f is increasing; bracket the root.
  double lo = 0.0;
  double hi = std::max(left.p, right.p);
  while (f(hi).first < 0) hi *= 2;

  const double e = (gamma - 1) / (2 * gamma);
  double p = std::pow((cl + cr - 0.5 * (gamma - 1) * (right.u - left.u)) /
                          (cl / std::pow(left.p, e) + cr / std::pow(right.p, e)),
                      1.0 / e);
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  for (int it = 1; it <= 200; ++it) {
    const auto [value, slope] = f(p);
    fan.iterations = it;
    if (std::abs(value) < 1e-13) break;
    if (value < 0) lo = p; else hi = p;
    double next = p - value / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == p || hi - lo <= 1e-16 * hi) break;
    p = next;
  }
  fan.p_star = p;
  fan.u_star = 0.5 * (left.u + right.u) + 0.5 * (side_function(p, right, gamma).first - side_function(p, left, gamma).first);
  fan.left_wave = p > left.p ? WaveKind::Shock : WaveKind::Rarefaction;
  fan.right_wave = p > right.p ? WaveKind::Shock : WaveKind::Rarefaction;
  return fan;
}

Primitive1D sample_riemann(const RiemannFan& fan, double xi) {
  const double g = fan.gamma;
  const double gm = (g - 1) / (g + 1);
  const double ps = fan.p_star;
  const double us = fan.u_star;

  if (xi <= us) {
    const Primitive1D& w = fan.left;
    const double c = sound_speed(w, g);
    if (ps > w.p) {
      const double ratio = ps / w.p;
      const double speed = w.u - c * std::sqrt((g + 1) / (2 * g) * ratio + (g - 1) / (2 * g));
      if (xi <= speed) return w;
      return {w.rho * (ratio + gm) / (gm * ratio + 1), us, ps};
    }
    const double head = w.u - c;
    const double c_star = c * std::pow(ps / w.p, (g - 1) / (2 * g));
    const double tail = us - c_star;
    if (xi <= head) return w;
    if (xi >= tail) return {w.rho * std::pow(ps / w.p, 1 / g), us, ps};
    const double factor = 2 / (g + 1) + gm / c * (w.u - xi);
    return {w.rho * std::pow(factor, 2 / (g - 1)), 2 / (g + 1) * (c + 0.5 * (g - 1) * w.u + xi),
            w.p * std::pow(factor, 2 * g / (g - 1))};
  }

  const Primitive1D& w = fan.right;
  const double c = sound_speed(w, g);
  if (ps > w.p) {
    const double ratio = ps / w.p;
    const double speed = w.u + c * std::sqrt((g + 1) / (2 * g) * ratio + (g - 1) / (2 * g));
    if (xi >= speed) return w;
    return {w.rho * (ratio + gm) / (gm * ratio + 1), us, ps};
  }
  const double head = w.u + c;
  const double c_star = c * std::pow(ps / w.p, (g - 1) / (2 * g));
  const double tail = us + c_star;
  if (xi >= head) return w;
  if (xi <= tail) return {w.rho * std::pow(ps / w.p, 1 / g), us, ps};
  const double factor = 2 / (g + 1) - gm / c * (w.u - xi);
  return {w.rho * std::pow(factor, 2 / (g - 1)), 2 / (g + 1) * (-c + 0.5 * (g - 1) * w.u + xi),
          w.p * std::pow(factor, 2 * g / (g - 1))};
}

double SampledField::interpolate(int k, double x) const {
  const int n = grid.n_cells;
  const double s = (x - grid.x(0)) / grid.dx;
  if (s <= 0) return state(k, 0);
  if (s >= n - 1) return state(k, n - 1);
  const int i = static_cast<int>(std::floor(s));
  const double w = s - i;
  return (1 - w) * state(k, i) + w * state(k, i + 1);
}

SampledField highres_reference(const ProblemSpec& problem, const SchemeSpec& scheme, int n) {
  if (problem.dimension() != 1) throw std::invalid_argument("highres_reference: 1D problems only");
  const ProblemSpec fine = problem.with_resolution(n);
  return SampledField{fine.x, advance(fine, scheme).state};
}

}  // namespace weno
