// Benchmark problems with their domains, data, final times and time-step rules.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weno/bench/norms.hpp"
#include "weno/problem.hpp"
#include "weno/reference.hpp"

namespace weno::bench {

/// advection, advection-jump, burgers, sod, lax, 123, shock-entropy,
/// shock-entropy-k10, riemann2d, dmr
std::vector<std::string> problem_names();

/// Throws std::invalid_argument for unknown names.
ProblemSpec make_problem(std::string_view name);

/// Closed-form solution for scalar problems that have one.
std::optional<ExactSolution> closed_form_exact(const ProblemSpec& problem);

/// Left/right primitive states of the shock tube problems.
std::optional<std::pair<Primitive1D, Primitive1D>> riemann_data(const ProblemSpec& problem);

}  // namespace weno::bench
