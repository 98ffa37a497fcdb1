#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pmvw/catalog.hpp"
#include "pmvw/error.hpp"
#include "pmvw/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pmv-workbench: exact-arithmetic checks for interval algebras over "
               "lattice-ordered groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::string report_out;
  std::vector<std::string> suite_override;
  long samples_override = -1;
  std::int64_t seed_override = -1;

  CLI::App* run_cmd = app.add_subcommand("run", "run verification suites from a config file");
  run_cmd->add_option("--config", config_path, "config file path")->required();
  run_cmd->add_option("--seed", seed_override, "override the sampling seed");
  run_cmd->add_option("--samples", samples_override, "override samples per check");
  run_cmd->add_option("--suite", suite_override, "run only the named suites (repeatable)");
  run_cmd->add_option("--report-out", report_out, "also write the report document to a file");

  CLI::App* list_cmd =
      app.add_subcommand("list-builtins", "print the shipped carriers, families and identities");

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    std::cout << pmvw::catalog::render_builtins();
    return 0;
  }

  try {
    pmvw::WorkbenchConfig config = pmvw::parse_config_file(config_path);
    if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
    if (samples_override >= 0) config.samples = samples_override;
    if (!suite_override.empty()) {
      std::vector<std::string> suites;
      const auto& known = pmvw::all_suite_names();
      for (const auto& name : suite_override) {
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw pmvw::ParseError("unknown suite '" + name + "'");
        suites.push_back(name);
      }
      std::sort(suites.begin(), suites.end());
      suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
      config.suites = std::move(suites);
    }

    pmvw::RunReport report = pmvw::run(config);
    std::string document = report.render_document();
    std::cout << document;
    if (!report_out.empty()) {
      std::ofstream out(report_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write report to '" << report_out << "'\n";
        return 2;
      }
      out << document;
    }
    std::cerr << "-- timing --\n" << report.render_timing();
    return report.ok() ? 0 : 1;
  } catch (const pmvw::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pmvw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
