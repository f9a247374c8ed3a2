// fex: extension-operator bounds, certificates and sweeps on finite abelian
// groups.
//
//   fex bounds|alpha|chain|khinchin|sweep --config <path> [--out <path>] [--csv <path>]
//
// Exit codes: 0 success, 1 config error, 2 budget/guard error,
// 3 certificate violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fex/error.hpp"
#include "fex/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kGuardError = 2, kViolation = 3 };

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fex::Error(fex::ErrorKind::config, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear extension operators into the Fourier algebra of a finite abelian group"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_path;
  std::string csv_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> budget;
  bool quiet = false;

  for (const auto* name : {"bounds", "alpha", "chain", "khinchin", "sweep"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " mode");
    sub->add_option("--config", config_path, "instance config (JSON)")->required();
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_option("--csv", csv_path, "write the sweep table as CSV");
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--grid", grid, "override the phase grid resolution M");
    sub->add_option("--budget", budget, "override the descent iteration budget");
    sub->add_flag("--quiet", quiet, "suppress progress output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  const auto* sub = app.get_subcommands().front();
  try {
    auto config = fex::report::load_config(config_path);
    config.mode = fex::report::parse_mode(sub->get_name());
    if (seed) config.seed = *seed;
    if (grid) config.phase_grid = *grid;
    if (budget) config.budget = *budget;
    if (!csv_path.empty() && config.mode != fex::report::Mode::sweep) {
      throw fex::Error(fex::ErrorKind::config, "--csv is only available for sweep");
    }

    fex::report::Progress progress;
    if (!quiet) progress = [](std::string_view line) { std::cerr << line << '\n'; };
    const auto result = fex::report::run(config, progress);

    const auto text = result.report.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
    }
    if (!csv_path.empty()) write_text(csv_path, result.csv);

    if (result.violation) {
      std::cerr << "fex: certificate violation detected ("
                << result.report.value("violations", 0) << " failed checks)\n";
      return kViolation;
    }
    return kOk;
  } catch (const fex::Error& e) {
    std::cerr << "fex: " << fex::to_string(e.kind()) << " error: " << e.what() << '\n';
    return e.is_guard() ? kGuardError : kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "fex: error: " << e.what() << '\n';
    return kConfigError;
  }
}
