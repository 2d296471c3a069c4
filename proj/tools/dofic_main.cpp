#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dofic/report.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DOFIC_SEED")) {
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1;
}

void emit(const dofic::Json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else if (format == "csv")
    std::cout << dofic::render_csv(report);
  else
    std::cout << dofic::render_table(report);
}

struct AntennaFlags {
  int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
  void attach(CLI::App* cmd) {
    cmd->add_option("--m1", m1, "transmitter 1 antennas")->required();
    cmd->add_option("--m2", m2, "transmitter 2 antennas")->required();
    cmd->add_option("--n1", n1, "receiver 1 antennas")->required();
    cmd->add_option("--n2", n2, "receiver 2 antennas")->required();
  }
  dofic::AntennaConfig config() const { return dofic::validate(m1, m2, n1, n2); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dofic: exact DoF regions and alignment-scheme verification for the "
               "2-user MIMO interference channel"};
  app.require_subcommand(1);

  // region
  auto* region = app.add_subcommand("region", "bounds, active bounds and vertices of a DoF region");
  AntennaFlags region_ant;
  region_ant.attach(region);
  std::string region_csi = "delayed", region_format = "json";
  region->add_option("--csi", region_csi, "no|delayed|delayed-tx|delayed-cross|perfect")
      ->check(CLI::IsMember({"no", "delayed", "delayed-tx", "delayed-cross", "perfect"}));
  region->add_option("--format", region_format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // classify
  auto* classify = app.add_subcommand("classify", "case label, corner points, regime comparison");
  AntennaFlags classify_ant;
  classify_ant.attach(classify);
  std::string classify_format = "json";
  classify->add_option("--format", classify_format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run the corner schemes on random channels");
  AntennaFlags sim_ant;
  sim_ant.attach(simulate);
  std::string sim_corner = "all", sim_format = "json";
  int sim_trials = 20;
  int sim_inflate = 0;
  std::uint64_t sim_seed = default_seed();
  simulate->add_option("--corner", sim_corner, "corner label or 'all'");
  simulate->add_option("--trials", sim_trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--inflate-d1", sim_inflate, "negative control: extra user-1 symbols")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--format", sim_format)->check(CLI::IsMember({"json", "table"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "exhaustive checks over all canonical configs");
  int sweep_max = 4, sweep_trials = 5, sweep_threads = 0;
  std::string sweep_check = "taxonomy", sweep_format = "json";
  std::uint64_t sweep_seed = default_seed();
  sweep->add_option("--max", sweep_max, "antenna range 1..max")->check(CLI::PositiveNumber);
  sweep->add_option("--check", sweep_check, "taxonomy|equality|chain")
      ->check(CLI::IsMember({"taxonomy", "equality", "chain"}));
  sweep->add_option("--trials", sweep_trials)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed);
  sweep->add_option("--threads", sweep_threads)->check(CLI::NonNegativeNumber);
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "table"}));

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "write per-regime vertex CSVs and a bounds sidecar");
  AntennaFlags plot_ant;
  plot_ant.attach(plot);
  std::string plot_out;
  plot->add_option("--out", plot_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(region)) {
      emit(dofic::region_report(region_ant.config(), dofic::parse_regime(region_csi)),
           region_format);
      return 0;
    }
    if (app.got_subcommand(classify)) {
      emit(dofic::classify_report(classify_ant.config()), classify_format);
      return 0;
    }
    if (app.got_subcommand(simulate)) {
      const dofic::Json rep = dofic::simulate_report(sim_ant.config(), sim_corner, sim_trials,
                                                     sim_seed, sim_inflate);
      emit(rep, sim_format);
      return rep["all_passed"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(sweep)) {
      dofic::SweepOptions opts;
      opts.max_antennas = sweep_max;
      opts.check = sweep_check;
      opts.trials = sweep_trials;
      opts.seed = sweep_seed;
      opts.threads = static_cast<unsigned>(sweep_threads);
      const dofic::Json rep = dofic::sweep_report(opts);
      emit(rep, sweep_format);
      return rep["ok"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(plot)) {
      emit(dofic::plotdata_write(plot_ant.config(), plot_out), "json");
      return 0;
    }
  } catch (const dofic::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dofic::NonPositiveAntennaCount& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dofic::CornerUndefinedForCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
