// pptscan: sweep N-qubit state families against the GHZ-diagonal witness
// operators and report the first-violation thresholds.
//
//   pptscan sweep --family dur --n-min 3 --n-max 10 --format json --out rows.json
//   pptscan thresholds rows.json

#include "pptineq/scan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_sweep_command(const std::string& family, int n_min, int n_max,
                      const std::vector<std::string>& witness_names,
                      double visibility, bool visibility_set, bool check_ppt,
                      const std::string& format, std::uint64_t seed,
                      bool seed_set, const std::string& out_path) {
  pptineq::SweepConfig config;
  config.family = pptineq::state_family_from_string(family);
  config.n_min = n_min;
  config.n_max = n_max;
  if (visibility_set) config.visibility = visibility;
  if (seed_set) config.seed = seed;
  config.check_ppt_signature = check_ppt;
  config.format = pptineq::output_format_from_string(format);
  if (!witness_names.empty()) {
    config.witnesses.clear();
    for (const std::string& name : witness_names) {
      config.witnesses.push_back(pptineq::witness_kind_from_string(name));
    }
  }
  config.validate();

  std::vector<pptineq::SweepRow> rows = pptineq::run_sweep(config);
  std::string output = pptineq::emit(rows, config.format);

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << '\n';
      return 1;
    }
    out << output;
    if (!out) {
      std::cerr << "error: write failed: " << out_path << '\n';
      return 1;
    }
  }
  return 0;
}

int run_thresholds_command(const std::string& input_path) {
  std::ostringstream buffer;
  if (input_path.empty() || input_path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open input file: " << input_path << '\n';
      return 1;
    }
    buffer << in.rdbuf();
  }
  std::vector<pptineq::SweepRow> rows = pptineq::parse_rows_json(buffer.str());
  std::cout << pptineq::threshold_report(rows).format();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite PPT-inequality sweeps"};
  app.require_subcommand(1);

  std::string family = "dur";
  int n_min = 3, n_max = 10;
  std::vector<std::string> witness_names;
  double visibility = 0.0;
  bool check_ppt = false;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::string out_path;

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate witnesses over N");
  sweep->add_option("--family", family, "ghz | dur | noisyGhz");
  sweep->add_option("--n-min", n_min, "smallest N");
  sweep->add_option("--n-max", n_max, "largest N");
  auto* witness_opt = sweep->add_option(
      "--witness", witness_names,
      "mermin2 | threeSetting | continuous | pptOperator (repeatable; "
      "default all)");
  auto* vis_opt =
      sweep->add_option("--visibility", visibility, "V for noisyGhz");
  sweep->add_flag("--check-ppt", check_ppt, "compute PPT signature per N");
  sweep->add_option("--format", format, "csv | json | table");
  auto* seed_opt = sweep->add_option("--seed", seed, "RNG seed");
  sweep->add_option("--out", out_path, "output path (default stdout)");
  (void)witness_opt;

  std::string thresholds_input;
  CLI::App* thresholds = app.add_subcommand(
      "thresholds", "first violating N per witness, from sweep JSON");
  thresholds->add_option("input", thresholds_input,
                         "sweep JSON file ('-' for stdin)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      return run_sweep_command(family, n_min, n_max, witness_names, visibility,
                               vis_opt->count() > 0, check_ppt, format, seed,
                               seed_opt->count() > 0, out_path);
    }
    return run_thresholds_command(thresholds_input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const pptineq::CapacityError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const pptineq::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
