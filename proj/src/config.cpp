#include "parawave/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "parawave/expression.hpp"

namespace parawave {

namespace {

struct Entry {
  std::string value;
  int line;
};

// key -> (value, line); later duplicates override earlier ones.
std::map<std::string, Entry> parse_key_values(const std::string& text) {
  std::map<std::string, Entry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto from = s.find_first_not_of(" \t\r");
      if (from == std::string::npos) return std::string();
      const auto to = s.find_last_not_of(" \t\r");
      return s.substr(from, to - from + 1);
    };
    if (trim(line).empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", lineno);
    if (value.empty()) throw ConfigError("empty value for '" + key + "'", lineno);
    out[key] = {value, lineno};
  }
  return out;
}

double parse_number(const Entry& entry, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(entry.value.c_str(), &end);
  if (end == entry.value.c_str() || *end != '\0')
    throw ConfigError("malformed number for '" + key + "': " + entry.value,
                      entry.line);
  return v;
}

int parse_int(const Entry& entry, const std::string& key) {
  const double v = parse_number(entry, key);
  if (v != std::floor(v))
    throw ConfigError("'" + key + "' must be an integer", entry.line);
  return int(v);
}

std::vector<double> parse_list(const Entry& entry, const std::string& key) {
  std::vector<double> out;
  std::istringstream in(entry.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    while (*end == ' ' || *end == '\t') ++end;
    if (end == item.c_str() || *end != '\0')
      throw ConfigError("malformed list entry for '" + key + "': " + item,
                        entry.line);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list for '" + key + "'", entry.line);
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  const auto entries = parse_key_values(text);
  RunConfig cfg;
  for (const auto& [key, entry] : entries) {
    if (key == "problem") {
      if (entry.value == "example1") {
        cfg.problem = RunConfig::Problem::Example1;
      } else if (entry.value == "example2") {
        cfg.problem = RunConfig::Problem::Example2;
      } else {
        cfg.problem = RunConfig::Problem::Custom;
        cfg.problem_path = entry.value;
      }
    } else if (key == "family") {
      if (entry.value == "taylor") {
        cfg.family = RunConfig::Family::Taylor;
      } else if (entry.value == "chebyshev") {
        cfg.family = RunConfig::Family::Chebyshev;
      } else if (entry.value == "both") {
        cfg.family = RunConfig::Family::Both;
      } else {
        throw ConfigError("family must be taylor, chebyshev, or both",
                          entry.line);
      }
    } else if (key == "k") {
      cfg.k = parse_int(entry, key);
    } else if (key == "M") {
      cfg.M = parse_int(entry, key);
    } else if (key == "dt") {
      cfg.dt = parse_number(entry, key);
    } else if (key == "t_end") {
      cfg.t_end = parse_number(entry, key);
    } else if (key == "report_x") {
      cfg.report_x = parse_list(entry, key);
    } else if (key == "report_t") {
      cfg.report_t = parse_list(entry, key);
    } else if (key == "solver") {
      if (entry.value == "lu") {
        cfg.solver = LinearMethod::DirectLU;
      } else if (entry.value == "gmres") {
        cfg.solver = LinearMethod::RestartedGMRES;
      } else {
        throw ConfigError("solver must be lu or gmres", entry.line);
      }
    } else if (key == "gmres_tol") {
      cfg.gmres_tol = parse_number(entry, key);
    } else if (key == "gmres_restart") {
      cfg.gmres_restart = parse_int(entry, key);
    } else if (key == "gmres_maxiter") {
      cfg.gmres_maxiter = parse_int(entry, key);
    } else if (key == "output_dir") {
      cfg.output_dir = entry.value;
    } else {
      throw ConfigError("unknown key '" + key + "'", entry.line);
    }
  }

  const auto line_of = [&](const char* key) {
    const auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second.line;
  };
  if (cfg.k < 1 || cfg.k > 30)
    throw ConfigError("k must be in [1, 30]", line_of("k"));
  if (cfg.M < 1) throw ConfigError("M must be >= 1", line_of("M"));
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be > 0", line_of("dt"));
  if (cfg.t_end) {
    if (!(*cfg.t_end > 0.0))
      throw ConfigError("t_end must be > 0", line_of("t_end"));
    const double steps = *cfg.t_end / cfg.dt;
    if (std::abs(std::round(steps) * cfg.dt - *cfg.t_end) > 1e-12)
      throw ConfigError("dt does not divide t_end", line_of("dt"));
    for (double t : cfg.report_t) {
      if (t < 0.0 || t > *cfg.t_end + 1e-12)
        throw ConfigError("report_t entry outside [0, t_end]",
                          line_of("report_t"));
    }
  }
  for (double x : cfg.report_x) {
    if (x < 0.0 || x > 1.0)
      throw ConfigError("report_x entry outside [0, 1]", line_of("report_x"));
  }
  if (!(cfg.gmres_tol > 0.0))
    throw ConfigError("gmres_tol must be > 0", line_of("gmres_tol"));
  return cfg;
}

ExampleProblem parse_problem_text(const std::string& text) {
  const auto entries = parse_key_values(text);
  const auto require = [&](const char* key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end())
      throw ConfigError(std::string("missing problem key '") + key + "'", 0);
    return it->second;
  };
  const auto expr_of = [&](const char* key) {
    const Entry& entry = require(key);
    try {
      return Expression::parse(entry.value);
    } catch (const ExpressionError& e) {
      throw ConfigError(std::string("bad expression for '") + key + "' at column " +
                            std::to_string(e.position() + 1) + ": " + e.what(),
                        entry.line);
    }
  };
  const auto known = {"A",  "B",   "psi", "y0",  "y0_x",    "y0_xx", "f0",
                      "f0_t", "f1", "f1_t", "Q",   "Q_t",     "x_in",  "T",
                      "exact_y", "exact_X"};
  for (const auto& [key, entry] : entries) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown problem key '" + key + "'", entry.line);
  }

  ExampleProblem ex;
  ex.problem.A = parse_number(require("A"), "A");
  ex.problem.B = parse_number(require("B"), "B");
  const auto fn_xt = [](Expression e) {
    return [e = std::move(e)](double x, double t) { return e(x, t); };
  };
  const auto fn_x = [](Expression e) {
    return [e = std::move(e)](double x) { return e(x, 0.0); };
  };
  const auto fn_t = [](Expression e) {
    return [e = std::move(e)](double t) { return e(0.0, t); };
  };
  ex.problem.psi = fn_xt(expr_of("psi"));
  ex.problem.y0 = fn_x(expr_of("y0"));
  ex.problem.y0_x = fn_x(expr_of("y0_x"));
  ex.problem.y0_xx = fn_x(expr_of("y0_xx"));
  ex.problem.f0 = fn_t(expr_of("f0"));
  ex.problem.f0_t = fn_t(expr_of("f0_t"));
  ex.problem.f1 = fn_t(expr_of("f1"));
  ex.problem.f1_t = fn_t(expr_of("f1_t"));
  ex.problem.Q = fn_t(expr_of("Q"));
  ex.problem.Q_t = fn_t(expr_of("Q_t"));
  ex.problem.x_in = parse_number(require("x_in"), "x_in");
  ex.problem.T = parse_number(require("T"), "T");
  if (ex.problem.x_in <= 0.0 || ex.problem.x_in >= 1.0)
    throw ConfigError("x_in must lie strictly inside (0, 1)",
                      require("x_in").line);
  if (!(ex.problem.T > 0.0))
    throw ConfigError("T must be > 0", require("T").line);

  const bool has_y = entries.count("exact_y") != 0;
  const bool has_X = entries.count("exact_X") != 0;
  if (has_y != has_X)
    throw ConfigError("exact_y and exact_X must be given together", 0);
  if (has_y) {
    ex.exact.present = true;
    ex.exact.y = fn_xt(expr_of("exact_y"));
    const auto fX = expr_of("exact_X");
    ex.exact.X = [fX](double t) { return fX(0.0, t); };
  }
  return ex;
}

ExampleProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open problem file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

}  // namespace parawave
