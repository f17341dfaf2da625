#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "lics/errors.hpp"
#include "lics/run.hpp"

namespace {

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;
  std::string format = "csv";
  int threads = 1;
  double tol = 1e-9;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file")
      ->required();
  cmd->add_option("--out", args.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", args.threads, "Worker threads for scans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", args.tol, "Integration tolerance")
      ->check(CLI::PositiveNumber);
}

int execute(const CommonArgs& args,
            lics::ScanResult (*runner)(const lics::Scenario&,
                                       const lics::RunOptions&)) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const lics::Scenario sc = lics::load_scenario(args.scenario_path);
    const lics::ScanResult result = runner(sc, {args.threads, args.tol});

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!args.out_path.empty()) {
      file.open(args.out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open output file " << args.out_path
                  << '\n';
        return 3;
      }
      os = &file;
    }
    if (args.format == "json")
      lics::write_json(result, *os);
    else
      lics::write_csv(result, *os);

    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "wall time: " << elapsed << " s\n";
    return 0;
  } catch (const lics::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lics::NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enantioselective ionization simulator: effective non-Hermitian "
      "Hamiltonians, trapping detunings, Fano profiles, dark/bright "
      "decomposition and superposition preparation"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    lics::ScanResult (*runner)(const lics::Scenario&, const lics::RunOptions&);
  };
  const Sub subs[] = {
      {"evolve", "Time evolution per enantiomer branch", lics::run_evolve},
      {"fano", "Ionization profile vs. detuning", lics::run_fano},
      {"trap", "Trapping detunings (closed form and numeric)",
       lics::run_trap},
      {"darkbright", "Dark/bright block decomposition", lics::run_darkbright},
      {"stirap", "Superposition-state preparation", lics::run_stirap},
  };

  CommonArgs args;
  for (const Sub& s : subs) add_common(app.add_subcommand(s.name, s.help), args);

  CLI11_PARSE(app, argc, argv);

  for (const Sub& s : subs)
    if (app.got_subcommand(s.name)) return execute(args, s.runner);
  return 2;
}
