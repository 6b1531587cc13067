// cfrbench: solve one-card poker with CFR+ or vanilla CFR, sweep deck sizes,
// and measure regret-table statistics. Emits plot-ready CSV.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfrplus/evaluator.hpp"
#include "cfrplus/game_tree.hpp"
#include "cfrplus/solver.hpp"
#include "cfrplus/table_stats.hpp"

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct RunConfig {
  int deck_size = 3;
  std::string deck_range = "4..32";
  std::vector<std::string> variants = {"cfr+", "cfr"};
  std::string variant = "cfr+";
  int delay = 0;
  double target_milli = 1.0;
  int probe_interval = 10;
  int max_iterations = 100000;
  int stats_iterations = 500;
  double quantizer = cfrplus::kDefaultQuantizer;
  std::string stop_on = "average";
  bool vanilla_delay = false;
  bool strategy_report = false;
  std::string output;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

cfrplus::Variant parse_variant(const std::string& name) {
  if (name == "cfr+") return cfrplus::Variant::kCfrPlus;
  if (name == "cfr") return cfrplus::Variant::kVanillaCfr;
  throw CLI::ValidationError("--variant", "expected 'cfr+' or 'cfr'");
}

// "4..16" or a single "8".
std::pair<int, int> parse_deck_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--decks", "expected MIN..MAX, e.g. 4..32");
  }
}

// Writes to the output file when set, stdout otherwise. Relative paths are
// resolved under $CFRBENCH_OUTPUT_DIR when that is set.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path.empty()) return;
    std::string resolved = path;
    const char* dir = std::getenv("CFRBENCH_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0' && path.front() != '/') {
      resolved = std::string(dir) + "/" + path;
    }
    file_.emplace(resolved, std::ios::binary);
    if (!file_->is_open()) {
      throw std::ios_base::failure("cannot open output file: " + resolved);
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void finish() {
    stream().flush();
    if (file_ ? !*file_ : !std::cout) {
      throw std::ios_base::failure("write error on CSV output");
    }
  }

 private:
  std::optional<std::ofstream> file_;
};

cfrplus::SolverConfig solver_config(const RunConfig& run, const std::string& variant) {
  cfrplus::SolverConfig config;
  config.variant = parse_variant(variant);
  config.averaging_delay = run.delay;
  config.max_iterations = run.max_iterations;
  config.delay_vanilla_averaging = run.vanilla_delay;
  return config;
}

void print_strategy_report(const cfrplus::GameTree& tree, const cfrplus::Profile& profile) {
  std::cerr << "average strategy:\n";
  for (int p = 0; p < cfrplus::kNumPlayers; ++p) {
    for (int i = 0; i < tree.infoset_count(p); ++i) {
      const cfrplus::InfosetId id = tree.infoset_at(p, i);
      const cfrplus::PublicNode& node = tree.node(id.node);
      std::cerr << "  " << tree.infoset_label(id) << ":";
      for (int a = 0; a < node.num_actions(); ++a) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " %s=%.4f", node.actions[a].c_str(),
                      profile.strategies[p][i][a]);
        std::cerr << buf;
      }
      std::cerr << "\n";
    }
  }
}

int cmd_solve(const RunConfig& run) {
  const cfrplus::GameTree tree = cfrplus::build_one_card_poker({run.deck_size});
  cfrplus::Solver solver(tree, solver_config(run, run.variant));
  const auto metric = run.stop_on == "current" ? cfrplus::StopMetric::kCurrentProfile
                                               : cfrplus::StopMetric::kAverageProfile;
  const cfrplus::ConvergenceTrace trace =
      solver.solve_to_target(run.target_milli, run.probe_interval, metric);

  CsvSink sink(run.output);
  sink.stream() << "iteration,exploitability_avg_milli,exploitability_cur_milli\n";
  for (const auto& rec : trace.records) {
    sink.stream() << rec.iteration << ',' << format_double(rec.expl_avg_milli) << ','
                  << format_double(rec.expl_cur_milli) << '\n';
  }
  sink.finish();

  if (run.strategy_report) {
    print_strategy_report(tree, solver.average_profile());
  }

  if (trace.converged) {
    const auto& last = trace.records.back();
    std::cerr << "converged after " << trace.iterations_run << " iterations: avg "
              << last.expl_avg_milli << " milli, current " << last.expl_cur_milli
              << " milli\n";
    return kExitConverged;
  }
  std::cerr << "did not reach " << run.target_milli << " milli within "
            << run.max_iterations << " iterations\n";
  return kExitNotConverged;
}

int cmd_sweep(const RunConfig& run) {
  const auto [deck_min, deck_max] = parse_deck_range(run.deck_range);
  if (deck_min < 2 || deck_max < deck_min) {
    throw CLI::ValidationError("--decks", "range must be nonempty with decks >= 2");
  }
  for (const std::string& v : run.variants) parse_variant(v);

  CsvSink sink(run.output);
  sink.stream() << "deck_size,variant,iterations_to_target,converged\n";
  bool all_converged = true;
  for (int deck = deck_min; deck <= deck_max; ++deck) {
    const cfrplus::GameTree tree = cfrplus::build_one_card_poker({deck});
    for (const std::string& variant : run.variants) {
      cfrplus::Solver solver(tree, solver_config(run, variant));
      const cfrplus::ConvergenceTrace trace =
          solver.solve_to_target(run.target_milli, run.probe_interval);
      all_converged = all_converged && trace.converged;
      sink.stream() << deck << ',' << variant << ',' << trace.iterations_run << ','
                    << (trace.converged ? 1 : 0) << '\n';
      std::cerr << "deck " << deck << " " << variant << ": "
                << (trace.converged ? "converged at " : "not converged after ")
                << trace.iterations_run << " iterations\n";
    }
  }
  sink.finish();
  return all_converged ? kExitConverged : kExitNotConverged;
}

int cmd_stats(const RunConfig& run) {
  const cfrplus::GameTree tree = cfrplus::build_one_card_poker({run.deck_size});
  cfrplus::Solver plus(tree, solver_config(run, "cfr+"));
  cfrplus::Solver vanilla(tree, solver_config(run, "cfr"));

  // Statistics cover both players' regret entries combined.
  auto regret_stats = [&](const cfrplus::Solver& solver) {
    std::vector<double> entries;
    for (int p = 0; p < cfrplus::kNumPlayers; ++p) {
      const auto span = solver.regrets(p).entries();
      entries.insert(entries.end(), span.begin(), span.end());
    }
    return cfrplus::stats(entries, run.quantizer);
  };

  CsvSink sink(run.output);
  sink.stream() << "iteration,cfr_plus_zero_fraction,cfr_plus_entropy_bits,"
                   "cfr_zero_fraction,cfr_entropy_bits\n";
  int probes = 0;
  for (int t = 1; t <= run.stats_iterations; ++t) {
    plus.run_iteration();
    vanilla.run_iteration();
    if (t % run.probe_interval != 0) continue;
    const cfrplus::TableStats sp = regret_stats(plus);
    const cfrplus::TableStats sv = regret_stats(vanilla);
    sink.stream() << t << ',' << format_double(sp.zero_fraction) << ','
                  << format_double(sp.entropy_bits_per_entry) << ','
                  << format_double(sv.zero_fraction) << ','
                  << format_double(sv.entropy_bits_per_entry) << '\n';
    ++probes;
  }
  sink.finish();
  if (probes == 0) {
    std::cerr << "no probes: probe interval exceeds the iteration budget\n";
  }
  return kExitConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CFR+ / vanilla CFR benchmark for one-card poker"};
  app.require_subcommand(1);

  RunConfig run;

  CLI::App* solve = app.add_subcommand("solve", "solve one game and trace convergence");
  solve->add_option("--deck", run.deck_size, "deck size (>= 2)")->check(CLI::Range(2, 1 << 20));
  solve->add_option("--variant", run.variant, "cfr+ or cfr");
  solve->add_option("--d,--delay", run.delay, "averaging delay d")->check(CLI::NonNegativeNumber);
  solve->add_option("--target-milli", run.target_milli, "exploitability target, milli-bets/hand")
      ->check(CLI::PositiveNumber);
  solve->add_option("--probe-interval", run.probe_interval, "iterations between probes")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-iterations", run.max_iterations, "iteration budget")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--stop-on", run.stop_on, "profile watched for the target: average or current")
      ->check(CLI::IsMember({"average", "current"}));
  solve->add_flag("--vanilla-delay", run.vanilla_delay,
                  "apply the averaging delay to vanilla CFR too");
  solve->add_flag("--strategy-report", run.strategy_report,
                  "print the average strategy per infoset to stderr");
  solve->add_option("-o,--output", run.output, "CSV path (stdout when omitted)");

  CLI::App* sweep = app.add_subcommand("sweep", "iterations-to-target across deck sizes");
  sweep->add_option("--decks", run.deck_range, "deck range MIN..MAX (default 4..32)");
  sweep->add_option("--variants", run.variants, "variants to run (cfr+, cfr)")->delimiter(',');
  sweep->add_option("--d,--delay", run.delay, "averaging delay d")->check(CLI::NonNegativeNumber);
  sweep->add_option("--target-milli", run.target_milli, "exploitability target, milli-bets/hand")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--probe-interval", run.probe_interval, "iterations between probes")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-iterations", run.max_iterations, "iteration budget per run")
      ->check(CLI::NonNegativeNumber);
  sweep->add_flag("--vanilla-delay", run.vanilla_delay,
                  "apply the averaging delay to vanilla CFR too");
  sweep->add_option("-o,--output", run.output, "CSV path (stdout when omitted)");

  CLI::App* stats = app.add_subcommand("stats", "regret-table zero fraction and entropy, both variants");
  stats->add_option("--deck", run.deck_size, "deck size (>= 2)")->check(CLI::Range(2, 1 << 20));
  stats->add_option("--iterations", run.stats_iterations, "iterations to run")
      ->check(CLI::PositiveNumber);
  stats->add_option("--probe-interval", run.probe_interval, "iterations between probes")
      ->check(CLI::PositiveNumber);
  stats->add_option("--quantizer", run.quantizer, "entropy quantization step, chips")
      ->check(CLI::PositiveNumber);
  stats->add_option("--d,--delay", run.delay, "averaging delay d")->check(CLI::NonNegativeNumber);
  stats->add_option("-o,--output", run.output, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(run);
    if (sweep->parsed()) return cmd_sweep(run);
    return cmd_stats(run);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
