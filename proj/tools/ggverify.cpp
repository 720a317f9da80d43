#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gg/scenario.hpp"

namespace {

/// A run target is either an existing file path or the name of a bundled
/// scenario under the shipped scenarios directory.
std::string resolve(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return arg;
  fs::path bundled = fs::path(GG_SCENARIO_DIR) / (arg + ".json");
  if (fs::exists(bundled)) return bundled.string();
  throw gg::ScenarioError("no such scenario file or bundled name: " + arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic verification of generalized-geometry scenarios"};
  app.require_subcommand(1);

  std::string target, format = "text", out_path, check_id;
  bool timing = false;
  auto* run = app.add_subcommand("run", "run a scenario file or bundled scenario");
  run->add_option("scenario", target, "scenario file path or bundled name")->required();
  run->add_option("--format", format, "report format on stdout")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out_path, "also write the JSON report to a file");
  run->add_flag("--timing", timing, "include wall times (breaks byte-determinism)");
  auto* list = app.add_subcommand("list", "list the bundled scenarios");
  auto* explain =
      app.add_subcommand("explain", "describe the identity a check id verifies");
  explain->add_option("id", check_id, "check id as printed in reports")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    if (list->parsed()) {
      for (const auto& [name, desc] : gg::scenario_catalog())
        std::cout << name << "\n    " << desc << "\n";
      return 0;
    }
    if (explain->parsed()) {
      std::cout << gg::explain_check(check_id) << "\n";
      return 0;
    }
    gg::Scenario sc = gg::load_scenario(resolve(target));
    gg::Report rep = gg::run_scenario(sc);
    std::cout << (format == "json" ? rep.json(timing) : rep.text(timing));
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw gg::ScenarioError("cannot write report to " + out_path);
      out << rep.json(timing);
    }
    return rep.overall() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
