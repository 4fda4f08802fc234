#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "parawave/config.hpp"
#include "parawave/runner.hpp"

namespace {

int load_config(const std::string& path, const std::string& output_dir,
                parawave::RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "config error: cannot open '" << path << "'\n";
    return parawave::kExitConfigError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    cfg = parawave::parse_config(buffer.str());
  } catch (const parawave::ConfigError& e) {
    std::cerr << "config error in " << path << ", " << e.what() << "\n";
    return parawave::kExitConfigError;
  }
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  return parawave::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Wavelet collocation solver for the 1D parabolic inverse "
      "source-identification problem"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;

  CLI::App* solve = app.add_subcommand(
      "solve", "Run one or both wavelet families and write error CSVs");
  solve->add_option("--config", config_path, "key = value run configuration")
      ->required();
  solve->add_option("--output-dir", output_dir,
                    "overrides output_dir from the config");

  CLI::App* compare = app.add_subcommand(
      "compare", "Run both families and write the error-ratio table");
  compare->add_option("--config", config_path, "key = value run configuration")
      ->required();
  compare->add_option("--output-dir", output_dir,
                      "overrides output_dir from the config");

  CLI11_PARSE(app, argc, argv);

  parawave::RunConfig cfg;
  const int rc = load_config(config_path, output_dir, cfg);
  if (rc != parawave::kExitOk) return rc;
  return solve->parsed() ? parawave::run_command(cfg)
                         : parawave::compare_command(cfg);
}
