// Parameter sweeps over N and state families, threshold extraction, and
// CSV/JSON/table emission.

#pragma once

#include "pptineq/criteria.hpp"
#include "pptineq/witnesses.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pptineq {

enum class StateFamily { ghz, dur, noisyGhz };
enum class OutputFormat { csv, json, table };

std::string to_string(StateFamily family);
StateFamily state_family_from_string(const std::string& name);
OutputFormat output_format_from_string(const std::string& name);

struct SweepConfig {
  StateFamily family = StateFamily::dur;
  std::optional<double> visibility;  // noisyGhz only
  int n_min = 3;
  int n_max = 10;
  std::vector<WitnessKind> witnesses = {
      WitnessKind::mermin2, WitnessKind::threeSetting, WitnessKind::continuous,
      WitnessKind::pptOperator};
  bool check_ppt_signature = false;
  OutputFormat format = OutputFormat::table;
  std::optional<std::uint64_t> seed;

  void validate() const;  // throws std::invalid_argument on bad config
};

struct WitnessResult {
  WitnessKind kind;
  double value;
  double bound;
  bool violated;
};

struct SweepRow {
  int n;
  std::string family;
  std::vector<WitnessResult> witnesses;
  std::optional<bool> all_ppt;
  std::optional<int> npt_cut_count;
  std::optional<std::string> error;  // set when this row could not be computed
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

struct ThresholdReport {
  // First N with a violation per witness; empty optional when the threshold
  // was not reached within the swept range.
  std::map<WitnessKind, std::optional<int>> first_violating_n;

  std::string format() const;
};

ThresholdReport threshold_report(const std::vector<SweepRow>& rows);

// Serialized output. CSV: header `n,family,witness,value,bound,violated,
// all_ppt,npt_cuts`, one line per (row, witness), 12 significant digits,
// LF line endings. JSON: array of row objects. Rows carrying an error are
// emitted only in JSON.
std::string emit(const std::vector<SweepRow>& rows, OutputFormat format);

// Inverse of emit(rows, json); used by the `thresholds` subcommand.
std::vector<SweepRow> parse_rows_json(const std::string& text);

}  // namespace pptineq
