#include "pptineq/scan.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace pptineq {

using nlohmann::json;

std::string to_string(StateFamily family) {
  switch (family) {
    case StateFamily::ghz: return "ghz";
    case StateFamily::dur: return "dur";
    case StateFamily::noisyGhz: return "noisyGhz";
  }
  throw std::invalid_argument("unknown state family");
}

StateFamily state_family_from_string(const std::string& name) {
  if (name == "ghz") return StateFamily::ghz;
  if (name == "dur") return StateFamily::dur;
  if (name == "noisyGhz") return StateFamily::noisyGhz;
  throw std::invalid_argument("unknown state family: " + name);
}

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown output format: " + name);
}

void SweepConfig::validate() const {
  if (n_min < 2 || n_min > n_max || n_max > kMaxQubits) {
    throw std::invalid_argument("need 2 <= n_min <= n_max <= " +
                                std::to_string(kMaxQubits));
  }
  if (family == StateFamily::noisyGhz) {
    if (!visibility) {
      throw std::invalid_argument("noisyGhz family requires --visibility");
    }
    if (!(*visibility >= 0.0 && *visibility <= 1.0)) {
      throw std::invalid_argument("visibility must lie in [0, 1]");
    }
  } else if (visibility) {
    throw std::invalid_argument("--visibility only applies to noisyGhz");
  }
  if (family == StateFamily::dur && n_min < 3) {
    throw std::invalid_argument("dur family requires n_min >= 3");
  }
  if (witnesses.empty()) {
    throw std::invalid_argument("at least one witness required");
  }
}

namespace {

DensityOperator make_state(const SweepConfig& config, int n) {
  switch (config.family) {
    case StateFamily::ghz:
      return DensityOperator::projector(ghz(n, GhzSign::plus));
    case StateFamily::dur:
      return dur_state(n);
    case StateFamily::noisyGhz:
      return noisy_ghz({n, *config.visibility});
  }
  throw std::invalid_argument("unknown state family");
}

std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const Tolerances& tol = default_tolerances();
  std::vector<SweepRow> rows;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    SweepRow row;
    row.n = n;
    row.family = to_string(config.family);
    try {
      DensityOperator rho = make_state(config, n);
      for (WitnessKind kind : config.witnesses) {
        WitnessOperator w(kind, n);
        double value = std::abs(w.evaluate(rho));
        double bound = w.classical_bound();
        row.witnesses.push_back({kind, value, bound, value > bound + tol.eig});
      }
      if (config.check_ppt_signature) {
        PptSignature sig = ppt_signature(rho, tol);
        row.all_ppt = sig.all_ppt;
        row.npt_cut_count = static_cast<int>(sig.npt_cuts.size());
      }
    } catch (const CapacityError& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ThresholdReport threshold_report(const std::vector<SweepRow>& rows) {
  ThresholdReport report;
  for (const SweepRow& row : rows) {
    if (row.error) continue;
    for (const WitnessResult& w : row.witnesses) {
      auto it = report.first_violating_n.try_emplace(w.kind).first;
      if (w.violated && (!it->second || row.n < *it->second)) {
        it->second = row.n;
      }
    }
  }
  return report;
}

std::string ThresholdReport::format() const {
  std::ostringstream out;
  for (const auto& [kind, n] : first_violating_n) {
    out << to_string(kind) << ": ";
    if (n) {
      out << *n;
    } else {
      out << "threshold not reached in range";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,family,witness,value,bound,violated,all_ppt,npt_cuts\n";
  for (const SweepRow& row : rows) {
    if (row.error) continue;
    for (const WitnessResult& w : row.witnesses) {
      out << row.n << ',' << row.family << ',' << to_string(w.kind) << ','
          << fmt12(w.value) << ',' << fmt12(w.bound) << ','
          << (w.violated ? "true" : "false") << ',';
      if (row.all_ppt) out << (*row.all_ppt ? "true" : "false");
      out << ',';
      if (row.npt_cut_count) out << *row.npt_cut_count;
      out << '\n';
    }
  }
  return out.str();
}

std::string emit_table(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%4s  %-8s  %-12s  %16s  %16s  %-8s  %-7s  %s\n",
                "n", "family", "witness", "value", "bound", "violated",
                "all_ppt", "npt_cuts");
  out << line;
  for (const SweepRow& row : rows) {
    if (row.error) {
      std::snprintf(line, sizeof(line), "%4d  %-8s  error: %s\n", row.n,
                    row.family.c_str(), row.error->c_str());
      out << line;
      continue;
    }
    for (const WitnessResult& w : row.witnesses) {
      std::snprintf(line, sizeof(line),
                    "%4d  %-8s  %-12s  %16.12g  %16.12g  %-8s  %-7s  %s\n",
                    row.n, row.family.c_str(), to_string(w.kind).c_str(),
                    w.value, w.bound, w.violated ? "yes" : "no",
                    row.all_ppt ? (*row.all_ppt ? "yes" : "no") : "-",
                    row.npt_cut_count ? std::to_string(*row.npt_cut_count).c_str()
                                      : "-");
      out << line;
    }
  }
  return out.str();
}

json row_to_json(const SweepRow& row) {
  json j;
  j["n"] = row.n;
  j["family"] = row.family;
  json ws = json::array();
  for (const WitnessResult& w : row.witnesses) {
    ws.push_back({{"witness", to_string(w.kind)},
                  {"value", w.value},
                  {"bound", w.bound},
                  {"violated", w.violated}});
  }
  j["witnesses"] = std::move(ws);
  if (row.all_ppt) j["all_ppt"] = *row.all_ppt;
  if (row.npt_cut_count) j["npt_cuts"] = *row.npt_cut_count;
  if (row.error) j["error"] = *row.error;
  return j;
}

}  // namespace

std::string emit(const std::vector<SweepRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return emit_csv(rows);
    case OutputFormat::table:
      return emit_table(rows);
    case OutputFormat::json: {
      json arr = json::array();
      for (const SweepRow& row : rows) arr.push_back(row_to_json(row));
      return arr.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("unknown output format");
}

std::vector<SweepRow> parse_rows_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<SweepRow> rows;
  for (const json& j : arr) {
    SweepRow row;
    row.n = j.at("n").get<int>();
    row.family = j.at("family").get<std::string>();
    for (const json& w : j.at("witnesses")) {
      row.witnesses.push_back(
          {witness_kind_from_string(w.at("witness").get<std::string>()),
           w.at("value").get<double>(), w.at("bound").get<double>(),
           w.at("violated").get<bool>()});
    }
    if (j.contains("all_ppt")) row.all_ppt = j["all_ppt"].get<bool>();
    if (j.contains("npt_cuts")) row.npt_cut_count = j["npt_cuts"].get<int>();
    if (j.contains("error")) row.error = j["error"].get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pptineq
