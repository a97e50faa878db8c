#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logt/optim.hpp"

namespace logt {

enum class ProblemKind { kQuadraticPsd, kMetricLearning };
enum class Algorithm { kLogT, kEpochGd, kSgd };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct SynthConfig {
  std::int64_t n = 2000;
  int d = 10;
  double separation = 10.0;
};

struct HyperOverrides {
  std::optional<double> eta;
  std::optional<std::int64_t> M;
  std::optional<std::int64_t> B1;
};

/// One declarative experiment sweep: (algorithm x budget x repetition).
struct ExperimentConfig {
  ProblemKind problem = ProblemKind::kQuadraticPsd;
  int dim = 5;                      // quadratic iterate dimension
  std::string dataset_path;         // metric learning; empty => synthetic
  SynthConfig synth;
  double reg_lambda = 0.1;
  std::optional<double> domain_radius;  // set => PSD cone capped at this radius
  std::vector<Algorithm> algorithms;
  std::vector<std::int64_t> budgets;
  int repetitions = 1;
  std::uint64_t base_seed = 0;
  std::string output_path;
  bool record_wall_time = false;  // timings break byte-reproducibility
  HyperOverrides overrides;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig from_file(const std::string& path);
  void validate() const;
};

struct ResultRow {
  std::string algorithm;
  std::int64_t T = 0;
  std::uint64_t seed = 0;
  double final_objective = 0.0;
  std::optional<double> excess_risk;      // only when the optimum is known
  std::optional<double> excess_times_T;
  std::int64_t total_projections = 0;
  std::int64_t total_oracle_calls = 0;
  double wall_time_seconds = 0.0;
  bool failed = false;
};

struct SummaryRow {
  std::string algorithm;
  std::int64_t T = 0;
  int repetitions = 0;
  double mean_final_objective = 0.0;
  double std_final_objective = 0.0;
  std::optional<double> mean_excess_risk;
  std::optional<double> std_excess_risk;
  std::optional<double> mean_excess_times_T;
  std::optional<double> std_excess_times_T;
  double mean_total_projections = 0.0;
  double mean_total_oracle_calls = 0.0;
  double mean_wall_time_seconds = 0.0;
};

/// Runs every (algorithm, T, repetition) cell with seed = base_seed + r,
/// in deterministic grid order. A failing cell produces a failure row and
/// the sweep continues.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// Like run_experiment, but also hands back the traces in grid order
/// (failed cells carry an empty trace).
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, std::vector<RunTrace>* traces);

inline constexpr const char* kRawCsvHeader =
    "algorithm,T,seed,final_objective,excess_risk,excess_times_T,total_projections,"
    "total_oracle_calls,wall_time_seconds";

inline constexpr const char* kSummaryCsvHeader =
    "algorithm,T,repetitions,mean_final_objective,std_final_objective,mean_excess_risk,"
    "std_excess_risk,mean_excess_times_T,std_excess_times_T,mean_total_projections,"
    "mean_total_oracle_calls,mean_wall_time_seconds";

void write_raw_csv(const std::vector<ResultRow>& rows, std::ostream& out);
std::string raw_csv_string(const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_raw_csv(std::istream& in);

/// Groups rows by (algorithm, T) in first-appearance order; failed rows
/// are skipped, fully failed groups dropped with a warning on stderr.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

}  // namespace logt
