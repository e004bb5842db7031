#include "weno/bench/config.hpp"

#include <fstream>
#include <stdexcept>

namespace weno::bench {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("config: '" + key + "' is not a number: " + v);
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != static_cast<int>(d)) throw std::invalid_argument("config: '" + key + "' must be an integer: " + v);
  return static_cast<int>(d);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::runtime_error("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, trim(line.substr(eq + 1))).second)
      throw std::runtime_error("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  return parse_key_values(in);
}

SchemeSpec RunConfig::scheme_spec() const {
  SchemeSpec s = SchemeSpec::defaults(parse_family(scheme));
  if (p) s.p = *p;
  if (epsilon) s.eps = *epsilon;
  s.validate();
  return s;
}

RunConfig run_config_from(const std::map<std::string, std::string>& values) {
  RunConfig c;
  for (const auto& [key, v] : values) {
    if (key == "problem") c.problem = v;
    else if (key == "scheme") c.scheme = v;
    else if (key == "p") c.p = to_double(key, v);
    else if (key == "epsilon") c.epsilon = to_double(key, v);
    else if (key == "N") c.n = to_int(key, v);
    else if (key == "Ny") c.ny = to_int(key, v);
    else if (key == "T") c.final_time = to_double(key, v);
    else if (key == "dt_coefficient") c.dt_coefficient = to_double(key, v);
    else if (key == "output") c.output = v;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  return c;
}

}  // namespace weno::bench
