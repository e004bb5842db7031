// Benchmark driver: single runs, convergence tables, weight probes, the full
// experiment suite and golden-file comparison.
//
// Exit status: 0 ok, 1 golden/acceptance failure, 2 usage or runtime error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weno/bench/config.hpp"
#include "weno/bench/experiment.hpp"
#include "weno/bench/golden.hpp"
#include "weno/bench/norms.hpp"
#include "weno/bench/probe.hpp"
#include "weno/bench/registry.hpp"

namespace fs = std::filesystem;
using namespace weno;
using namespace weno::bench;

namespace {

fs::path output_root() {
  const char* env = std::getenv("WENO_OUTPUT_ROOT");
  return env && *env ? fs::path(env) : fs::path("weno_output");
}

std::vector<SchemeSpec> schemes_from(const std::string& list, std::optional<double> p, std::optional<double> eps) {
  std::vector<SchemeSpec> out;
  std::vector<std::string> names;
  if (list == "all") names = {"js", "m", "z", "zr"};
  else {
    std::size_t start = 0;
    while (start <= list.size()) {
      const auto comma = list.find(',', start);
      names.push_back(list.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (const auto& n : names) {
    RunConfig c;
    c.scheme = n;
    c.p = p;
    c.epsilon = eps;
    out.push_back(c.scheme_spec());
  }
  return out;
}

std::string scheme_label(const SchemeSpec& s) {
  std::string name = s.name();
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
  std::string label = "WENO-" + name;
  if (s.family == WeightFamily::ZR) label += "(p=" + format_double(s.p) + ")";
  return label;
}

void print_table(const SchemeSpec& scheme, const std::vector<ErrorReport>& rows) {
  std::printf("%s\n%6s %12s %8s %12s %8s %12s %8s\n", scheme_label(scheme).c_str(), "N", "L1", "order", "L2", "order",
              "Linf", "order");
  for (const auto& r : rows) {
    std::printf("%6d %12.3e ", r.n, r.error.l1);
    if (r.order) std::printf("%8.4f ", r.order->l1); else std::printf("%8s ", "-");
    std::printf("%12.3e ", r.error.l2);
    if (r.order) std::printf("%8.4f ", r.order->l2); else std::printf("%8s ", "-");
    std::printf("%12.3e ", r.error.linf);
    if (r.order) std::printf("%8.4f\n", r.order->linf); else std::printf("%8s\n", "-");
  }
}

int run_command(RunConfig cfg, const std::string& config_file) {
  if (!config_file.empty()) {
    RunConfig file = run_config_from(parse_key_values(fs::path(config_file)));
    // Flags win over the file.
    if (cfg.problem.empty()) cfg.problem = file.problem;
    if (cfg.scheme.empty()) cfg.scheme = file.scheme;
    if (!cfg.p) cfg.p = file.p;
    if (!cfg.epsilon) cfg.epsilon = file.epsilon;
    if (!cfg.n) cfg.n = file.n;
    if (!cfg.ny) cfg.ny = file.ny;
    if (!cfg.final_time) cfg.final_time = file.final_time;
    if (!cfg.dt_coefficient) cfg.dt_coefficient = file.dt_coefficient;
    if (!cfg.output) cfg.output = file.output;
  }
  if (cfg.problem.empty()) throw CLI::ValidationError("--problem", "a problem is required");
  if (cfg.scheme.empty()) cfg.scheme = "zr";
  const SchemeSpec scheme = cfg.scheme_spec();
  RunOptions opt{cfg.n, cfg.ny, cfg.final_time, cfg.dt_coefficient};
  const fs::path dir = cfg.output ? fs::path(*cfg.output) : output_root() / cfg.problem / scheme.name();
  const ExperimentResult r = run_experiment(cfg.problem, scheme, opt, dir);
  std::printf("%s %s: %ld steps to t=%g in %.2fs -> %s\n", cfg.problem.c_str(), scheme_label(scheme).c_str(),
              r.run.steps, r.run.t, r.wall_seconds, dir.string().c_str());
  if (r.norms) std::printf("  L1=%.6e L2=%.6e Linf=%.6e\n", r.norms->l1, r.norms->l2, r.norms->linf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fifth-order WENO benchmark driver"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  run_cfg.scheme.clear();
  std::string config_file;
  auto* run = app.add_subcommand("run", "Run one experiment and write its artifacts");
  run->add_option("--problem", run_cfg.problem, "Problem name")
      ->check(CLI::IsMember(problem_names()));
  run->add_option("--scheme", run_cfg.scheme, "linear|js|m|z|zr (default zr)");
  run->add_option("--p", run_cfg.p, "Exponent for Z/ZR");
  run->add_option("--epsilon", run_cfg.epsilon, "Regularization");
  run->add_option("--N", run_cfg.n, "Cells along x");
  run->add_option("--Ny", run_cfg.ny, "Cells along y");
  run->add_option("--T", run_cfg.final_time, "Final time override");
  run->add_option("--dt-coefficient", run_cfg.dt_coefficient, "Time-step coefficient override");
  run->add_option("--output", run_cfg.output, "Output directory");
  run->add_option("--config", config_file, "key=value file; flags take precedence")->check(CLI::ExistingFile);

  std::string table_schemes = "all";
  std::optional<double> table_p;
  std::vector<int> table_n{10, 20, 40, 80, 160, 320};
  auto* table = app.add_subcommand("table", "Convergence tables for the smooth advection problem");
  table->add_option("--schemes", table_schemes, "Comma list or 'all'");
  table->add_option("--p", table_p, "Exponent for Z/ZR");
  table->add_option("--N", table_n, "Resolutions")->expected(1, -1)->delimiter(',');

  std::string probe_schemes = "js,m,z";
  std::vector<double> probe_p;
  bool after_step = false;
  std::string probe_output;
  auto* probe = app.add_subcommand("probe", "First-step nonlinear weights around the jump");
  probe->add_option("--schemes", probe_schemes, "Comma list");
  probe->add_option("--zr-p", probe_p, "Add WENO-ZR at each exponent")->expected(1, -1)->delimiter(',');
  probe->add_flag("--after-step", after_step, "Use the state after the first full step");
  probe->add_option("--output", probe_output, "CSV file (probe rows and full distribution)");

  std::string suite_output;
  bool suite_skip_2d = false;
  auto* suite = app.add_subcommand("suite", "Every experiment with JS, M, Z and ZR");
  suite->add_option("--output", suite_output, "Output directory");
  suite->add_flag("--skip-2d", suite_skip_2d, "Leave out the 2D problems");

  std::string golden_run, golden_file;
  double golden_tol = 1e-12;
  auto* golden = app.add_subcommand("golden", "Compare a CSV artifact with a golden file");
  golden->add_option("run", golden_run, "Run CSV")->required()->check(CLI::ExistingFile);
  golden->add_option("golden", golden_file, "Golden CSV")->required()->check(CLI::ExistingFile);
  golden->add_option("--tolerance", golden_tol, "Max absolute deviation per column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return run_command(run_cfg, config_file);

    if (*table) {
      const ProblemSpec problem = make_problem("advection");
      for (const auto& s : schemes_from(table_schemes, table_p, std::nullopt)) {
        print_table(s, convergence_table(problem, s, table_n, *closed_form_exact(problem)));
        std::printf("\n");
      }
      return 0;
    }

    if (*probe) {
      std::vector<SchemeSpec> schemes = schemes_from(probe_schemes, std::nullopt, std::nullopt);
      for (double p : probe_p) schemes.push_back(SchemeSpec::zr(p));
      const auto rows = weight_probe(schemes, after_step);
      std::printf("%-16s %8s %12s %12s %12s\n", "scheme", "x", "omega0", "omega1", "omega2");
      for (const auto& r : rows)
        std::printf("%-16s %8.3f %12.6f %12.6f %12.6f\n", scheme_label(r.scheme).c_str(), r.x, r.omega(0), r.omega(1),
                    r.omega(2));
      if (!probe_output.empty()) {
        write_csv(fs::path(probe_output), probe_table(rows));
        CsvTable dist;
        dist.columns = {"x", "family", "p", "omega0", "omega1", "omega2"};
        const Grid1D grid = make_problem("advection-jump").x;
        for (const auto& s : schemes) {
          const auto w = first_step_weights(s, after_step);
          for (int i = 0; i < grid.n_cells; ++i)
            dist.rows.push_back({grid.x(i), static_cast<double>(s.family), s.p, w[i](0), w[i](1), w[i](2)});
        }
        fs::path d = fs::path(probe_output);
        write_csv(d.replace_extension(".distribution.csv"), dist);
      }
      return 0;
    }

    if (*suite) {
      const fs::path root = suite_output.empty() ? output_root() / "suite" : fs::path(suite_output);
      for (const auto& name : problem_names()) {
        if (name == "advection-jump") continue;
        if (suite_skip_2d && (name == "riemann2d" || name == "dmr")) continue;
        for (const auto& s : schemes_from("all", std::nullopt, std::nullopt)) {
          const ExperimentResult r = run_experiment(name, s, {}, root / name / s.name());
          std::printf("%-18s %-14s %8ld steps %9.2fs", name.c_str(), scheme_label(s).c_str(), r.run.steps,
                      r.wall_seconds);
          if (r.norms) std::printf("  L1=%.4e", r.norms->l1);
          std::printf("\n");
          std::fflush(stdout);
        }
      }
      return 0;
    }

    if (*golden) {
      const GoldenReport report = compare_golden(fs::path(golden_run), fs::path(golden_file), golden_tol);
      std::printf("%s\n", report.summary().c_str());
      return report.pass ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
