// key=value run configuration shared by the config file and CLI flags.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "weno/weights.hpp"

namespace weno::bench {

/// Parses `key = value` lines; '#' starts a comment. Throws std::runtime_error on
/// malformed lines or duplicate keys.
std::map<std::string, std::string> parse_key_values(std::istream& in);
std::map<std::string, std::string> parse_key_values(const std::filesystem::path& path);

struct RunConfig {
  std::string problem;
  std::string scheme = "zr";
  std::optional<double> p;
  std::optional<double> epsilon;
  std::optional<int> n;
  std::optional<int> ny;
  std::optional<double> final_time;
  std::optional<double> dt_coefficient;
  std::optional<std::string> output;

  /// Family defaults with p and epsilon overridden when given.
  SchemeSpec scheme_spec() const;
};

/// Recognized keys: problem, scheme, p, epsilon, N, Ny, T, dt_coefficient, output.
/// Unknown keys and unparsable numbers throw std::invalid_argument.
RunConfig run_config_from(const std::map<std::string, std::string>& values);

}  // namespace weno::bench
