// Single benchmark runs and their on-disk artifacts.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "weno/bench/csv.hpp"
#include "weno/bench/norms.hpp"
#include "weno/evolve.hpp"
#include "weno/reference.hpp"

namespace weno::bench {

struct RunOptions {
  std::optional<int> n;
  std::optional<int> ny;
  std::optional<double> final_time;
  std::optional<double> dt_coefficient;
  bool with_reference = true;  // compute the fine-grid reference where one is needed
};

struct ExperimentResult {
  ProblemSpec problem;
  SchemeSpec scheme;
  AdvanceResult run;
  std::optional<SampledField> highres;
  std::optional<NormTriple> norms;  // of u for scalar problems, of rho otherwise
  double wall_seconds = 0.0;
};

ExperimentResult run_problem(const std::string& name, const SchemeSpec& scheme, const RunOptions& options = {});

/// Solution columns: x,u[,u_exact] for scalars; x,rho,u,P[,rho_exact,u_exact,P_exact |
/// rho_ref] for 1D Euler; x,y,rho for 2D (double Mach restricted to x <= 3).
CsvTable solution_table(const ExperimentResult& result);

/// Writes solution.csv, reference.csv (if any), norms.txt (if any) and meta.txt.
/// Throws std::runtime_error if the directory cannot be written.
void write_artifacts(const ExperimentResult& result, const std::filesystem::path& dir);

ExperimentResult run_experiment(const std::string& name, const SchemeSpec& scheme, const RunOptions& options,
                                const std::filesystem::path& dir);

/// Build identification baked in at configure time.
const char* git_describe();

}  // namespace weno::bench
