#include "weno/bench/experiment.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "weno/bench/registry.hpp"

#ifndef WENO_GIT_DESCRIBE
#define WENO_GIT_DESCRIBE "unknown"
#endif

namespace weno::bench {

const char* git_describe() { return WENO_GIT_DESCRIBE; }

namespace {

Eigen::Vector3d primitive(const Eigen::ArrayXXd& state, int i) {
  return cons_to_prim(ModelSpec::euler_1d(), state.col(i).matrix());
}

std::string rule_name(const TimeStepRule& r) {
  switch (r.kind) {
    case TimeStepKind::DtEqCDx: return "dt=c*dx";
    case TimeStepKind::DtEqCDxPow: return "dt=c*dx^(5/3)";
    case TimeStepKind::DtEqCMinDxDy: return "dt=c*min(dx,dy)";
  }
  return "?";
}

}  // namespace

ExperimentResult run_problem(const std::string& name, const SchemeSpec& scheme, const RunOptions& options) {
  ExperimentResult r;
  r.problem = make_problem(name);
  if (options.n || options.ny)
    r.problem = r.problem.with_resolution(options.n.value_or(r.problem.x.n_cells), options.ny);
  if (options.final_time) r.problem.final_time = *options.final_time;
  if (options.dt_coefficient) r.problem.dt_rule.c = *options.dt_coefficient;
  r.scheme = scheme;

  const auto start = std::chrono::steady_clock::now();
  r.run = advance(r.problem, scheme);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const ProblemSpec& p = r.problem;
  const double T = r.run.t;
  if (const auto exact = closed_form_exact(p)) {
    Eigen::ArrayXd x;
    const Eigen::ArrayXd u = sample_nodes(p, r.run.state, &x);
    r.norms = error_norms(u, x.unaryExpr([&](double xi) { return (*exact)(xi, T); }));
  } else if (const auto data = riemann_data(p)) {
    const RiemannFan fan = solve_riemann_euler(data->first, data->second, p.model.gamma);
    Eigen::ArrayXd rho_exact(p.x.n_cells);
    for (int i = 0; i < p.x.n_cells; ++i) rho_exact(i) = T > 0 ? sample_riemann(fan, p.x.x(i) / T).rho
                                                              : (p.x.x(i) <= 0 ? fan.left.rho : fan.right.rho);
    r.norms = error_norms(r.run.state.row(0).transpose(), rho_exact);
  } else if (p.reference == ReferenceKind::HighresM2000 && options.with_reference) {
    r.highres = highres_reference(p);
    Eigen::ArrayXd rho_ref(p.x.n_cells);
    for (int i = 0; i < p.x.n_cells; ++i) rho_ref(i) = r.highres->interpolate(0, p.x.x(i));
    r.norms = error_norms(r.run.state.row(0).transpose(), rho_ref);
  }
  return r;
}

CsvTable solution_table(const ExperimentResult& r) {
  const ProblemSpec& p = r.problem;
  const double T = r.run.t;
  CsvTable t;
  if (p.dimension() == 2) {
    t.columns = {"x", "y", "rho"};
    const bool clip = p.name == "dmr";
    for (int j = 0; j < p.y->n_cells; ++j)
      for (int i = 0; i < p.x.n_cells; ++i) {
        const double x = p.x.x(i);
        if (clip && x > 3.0) continue;
        t.rows.push_back({x, p.y->x(j), r.run.state(0, static_cast<long>(j) * p.x.n_cells + i)});
      }
    return t;
  }
  if (!p.model.is_system()) {
    Eigen::ArrayXd x;
    const Eigen::ArrayXd u = sample_nodes(p, r.run.state, &x);
    const auto exact = closed_form_exact(p);
    t.columns = exact ? std::vector<std::string>{"x", "u", "u_exact"} : std::vector<std::string>{"x", "u"};
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      std::vector<double> row{x(i), u(i)};
      if (exact) row.push_back((*exact)(x(i), T));
      t.rows.push_back(row);
    }
    return t;
  }
  t.columns = {"x", "rho", "u", "P"};
  const auto data = riemann_data(p);
  std::optional<RiemannFan> fan;
  if (data) {
    fan = solve_riemann_euler(data->first, data->second, p.model.gamma);
    t.columns.insert(t.columns.end(), {"rho_exact", "u_exact", "P_exact"});
  } else if (r.highres) {
    t.columns.push_back("rho_ref");
  }
  for (int i = 0; i < p.x.n_cells; ++i) {
    const double x = p.x.x(i);
    const Eigen::Vector3d w = primitive(r.run.state, i);
    std::vector<double> row{x, w(0), w(1), w(2)};
    if (fan) {
      const Primitive1D e = T > 0 ? sample_riemann(*fan, x / T) : (x <= 0 ? fan->left : fan->right);
      row.insert(row.end(), {e.rho, e.u, e.p});
    } else if (r.highres) {
      row.push_back(r.highres->interpolate(0, x));
    }
    t.rows.push_back(row);
  }
  return t;
}

void write_artifacts(const ExperimentResult& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  write_csv(dir / "solution.csv", solution_table(r));

  if (r.highres) {
    CsvTable ref;
    ref.columns = {"x", "rho", "u", "P"};
    for (int i = 0; i < r.highres->grid.n_cells; ++i) {
      const Eigen::Vector3d w = primitive(r.highres->state, i);
      ref.rows.push_back({r.highres->grid.x(i), w(0), w(1), w(2)});
    }
    write_csv(dir / "reference.csv", ref);
  }

  if (r.norms) {
    std::ofstream out(dir / "norms.txt");
    if (!out) throw std::runtime_error("cannot write norms in " + dir.string());
    out << "quantity=" << (r.problem.model.is_system() ? "rho" : "u") << '\n'
        << "L1=" << format_double(r.norms->l1) << '\n'
        << "L2=" << format_double(r.norms->l2) << '\n'
        << "Linf=" << format_double(r.norms->linf) << '\n';
  }

  std::ofstream meta(dir / "meta.txt");
  if (!meta) throw std::runtime_error("cannot write metadata in " + dir.string());
  meta << "problem=" << r.problem.name << '\n'
       << "scheme=" << r.scheme.name() << '\n'
       << "p=" << format_double(r.scheme.p) << '\n'
       << "epsilon=" << format_double(r.scheme.eps) << '\n'
       << "N=" << r.problem.x.n_cells << '\n';
  if (r.problem.y) meta << "Ny=" << r.problem.y->n_cells << '\n';
  meta << "T=" << format_double(r.run.t) << '\n'
       << "dt_rule=" << rule_name(r.problem.dt_rule) << '\n'
       << "dt_coefficient=" << format_double(r.problem.dt_rule.c) << '\n'
       << "dt=" << format_double(r.run.dt) << '\n'
       << "steps=" << r.run.steps << '\n'
       << "wall_seconds=" << r.wall_seconds << '\n'
       << "git=" << git_describe() << '\n';
}

ExperimentResult run_experiment(const std::string& name, const SchemeSpec& scheme, const RunOptions& options,
                                const std::filesystem::path& dir) {
  ExperimentResult r = run_problem(name, scheme, options);
  write_artifacts(r, dir);
  return r;
}

}  // namespace weno::bench
