#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "potlab/errors.hpp"
#include "potlab/scenario.hpp"

namespace {

int threads_cap() {
  if (const char* env = std::getenv("POTLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

void write_outputs(const potlab::ScenarioResult& res, const nlohmann::json& sc,
                   const std::string& base_dir) {
  auto resolve = [&](const std::string& path) {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : std::filesystem::path(base_dir) / p;
  };
  if (sc.contains("output_csv")) {
    std::ofstream out(resolve(sc["output_csv"].get<std::string>()),
                      std::ios::binary);
    out << res.csv;
  } else {
    std::cout << res.csv;
  }
  const std::string verdict = res.verdict.dump(2);
  if (sc.contains("output_json")) {
    std::ofstream out(resolve(sc["output_json"].get<std::string>()));
    out << verdict << "\n";
  } else {
    std::cout << verdict << "\n";
  }
}

int run_file(const std::string& path) {
  const std::string base_dir =
      std::filesystem::path(path).parent_path().string().empty()
          ? "."
          : std::filesystem::path(path).parent_path().string();
  nlohmann::json sc;
  try {
    sc = potlab::load_scenario(path);
  } catch (const potlab::InputError& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  }
  const potlab::ScenarioResult res = potlab::run_scenario(sc, base_dir);
  write_outputs(res, sc, base_dir);
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"potlab: removable-singularity laboratory for p-harmonic functions"};
  app.require_subcommand(1);
  (void)threads_cap();  // parallelism cap; all current kernels are single-threaded

  std::string run_path, validate_path, demo_name;
  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("file", run_path, "scenario JSON file")->required();
  CLI::App* validate = app.add_subcommand("validate", "schema-check a scenario file");
  validate->add_option("file", validate_path, "scenario JSON file")->required();
  CLI::App* demo = app.add_subcommand("demo", "run a bundled demo scenario");
  demo->add_option("name", demo_name, "demo name (see 'demo list')")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_file(run_path);

  if (validate->parsed()) {
    nlohmann::json sc;
    try {
      sc = potlab::load_scenario(validate_path);
    } catch (const potlab::InputError& ex) {
      std::cerr << ex.what() << "\n";
      return 1;
    }
    const std::string base_dir =
        std::filesystem::path(validate_path).parent_path().string().empty()
            ? "."
            : std::filesystem::path(validate_path).parent_path().string();
    const auto diags = potlab::validate_scenario(sc, base_dir);
    for (const auto& d : diags) std::cout << d << "\n";
    return diags.empty() ? 0 : 1;
  }

  if (demo->parsed()) {
    if (demo_name == "list") {
      for (const auto& n : potlab::demo_names()) std::cout << n << "\n";
      return 0;
    }
    nlohmann::json sc;
    try {
      sc = potlab::demo_scenario(demo_name);
    } catch (const potlab::InputError& ex) {
      std::cerr << ex.what() << "\n";
      return 1;
    }
    const potlab::ScenarioResult res = potlab::run_scenario(sc, ".");
    write_outputs(res, sc, ".");
    return res.exit_code;
  }
  return 0;
}
