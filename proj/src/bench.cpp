#include "logt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include "logt/errors.hpp"
#include "logt/problems.hpp"

namespace logt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

struct ProblemBundle {
  int dim = 0;
  ProblemSpec spec;
  GradientOracle::GradientFn gradient;
  std::function<double(const SymMatrix&)> objective;
  std::optional<double> bound_g;
};

ProblemBundle build_problem(const ExperimentConfig& cfg,
                            std::shared_ptr<MetricLearningProblem>& keep_alive) {
  ProblemBundle b;
  if (cfg.problem == ProblemKind::kQuadraticPsd) {
    QuadraticPsdProblem quad{cfg.dim};
    b.dim = cfg.dim;
    b.spec = quad.spec();
    b.gradient = quad.gradient_fn();
    b.objective = b.spec.exact_objective;
    if (cfg.domain_radius) b.bound_g = quad.gradient_bound(*cfg.domain_radius);
    b.spec.G = b.bound_g;
  } else {
    Dataset ds;
    if (!cfg.dataset_path.empty()) {
      ds = load_libsvm(cfg.dataset_path);
      normalize_unit_range(ds);
    } else {
      ds = synth_clusters(cfg.synth.n, cfg.synth.d, cfg.synth.separation, cfg.base_seed);
    }
    keep_alive = std::make_shared<MetricLearningProblem>(std::move(ds), cfg.reg_lambda,
                                                         cfg.base_seed);
    b.dim = keep_alive->dataset().d;
    b.spec = keep_alive->spec();
    b.gradient = keep_alive->gradient_fn();
    b.objective = [problem = keep_alive](const SymMatrix& m) {
      return problem->objective_estimate(m);
    };
  }
  return b;
}

Domain make_domain(const ExperimentConfig& cfg, int dim) {
  if (cfg.domain_radius) return Domain::psd_cone_capped(dim, *cfg.domain_radius);
  return Domain::psd_cone(dim);
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kLogT:
      return "logt";
    case Algorithm::kEpochGd:
      return "epoch_gd";
    case Algorithm::kSgd:
      return "sgd";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "logt") return Algorithm::kLogT;
  if (name == "epoch_gd") return Algorithm::kEpochGd;
  if (name == "sgd") return Algorithm::kSgd;
  throw ConfigError("unknown algorithm '" + name + "' (expected logt, epoch_gd or sgd)");
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    const std::string problem = j.at("problem").get<std::string>();
    if (problem == "quadratic_psd") {
      cfg.problem = ProblemKind::kQuadraticPsd;
    } else if (problem == "metric_learning") {
      cfg.problem = ProblemKind::kMetricLearning;
    } else {
      throw ConfigError("unknown problem '" + problem + "'");
    }
    cfg.dim = j.value("dim", 5);
    cfg.dataset_path = j.value("dataset_path", std::string());
    if (j.contains("synthetic")) {
      const auto& s = j.at("synthetic");
      cfg.synth.n = s.value("n", cfg.synth.n);
      cfg.synth.d = s.value("d", cfg.synth.d);
      cfg.synth.separation = s.value("separation", cfg.synth.separation);
    }
    cfg.reg_lambda = j.value("reg_lambda", 0.1);
    if (j.contains("domain_radius")) cfg.domain_radius = j.at("domain_radius").get<double>();
    for (const auto& name : j.at("algorithms")) {
      cfg.algorithms.push_back(algorithm_from_string(name.get<std::string>()));
    }
    cfg.budgets = j.at("budgets").get<std::vector<std::int64_t>>();
    cfg.repetitions = j.value("repetitions", 1);
    cfg.base_seed = j.value("base_seed", std::uint64_t{0});
    cfg.output_path = j.value("output_path", std::string());
    cfg.record_wall_time = j.value("record_wall_time", false);
    if (j.contains("overrides")) {
      const auto& o = j.at("overrides");
      if (o.contains("eta")) cfg.overrides.eta = o.at("eta").get<double>();
      if (o.contains("M")) cfg.overrides.M = o.at("M").get<std::int64_t>();
      if (o.contains("B1")) cfg.overrides.B1 = o.at("B1").get<std::int64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad experiment config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return from_json(j);
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw ConfigError("config: at least one algorithm required");
  if (budgets.empty()) throw ConfigError("config: at least one budget required");
  for (std::size_t i = 0; i + 1 < budgets.size(); ++i) {
    if (budgets[i] >= budgets[i + 1]) throw ConfigError("config: budgets must be strictly increasing");
  }
  if (budgets.front() < 1) throw ConfigError("config: budgets must be positive");
  if (repetitions < 1) throw ConfigError("config: repetitions must be >= 1");
  if (problem == ProblemKind::kQuadraticPsd && dim < 1) throw ConfigError("config: dim must be >= 1");
  if (domain_radius && !(*domain_radius > 0.0)) throw ConfigError("config: domain_radius must be positive");
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, nullptr);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, std::vector<RunTrace>* traces) {
  cfg.validate();
  std::shared_ptr<MetricLearningProblem> keep_alive;
  const ProblemBundle problem = build_problem(cfg, keep_alive);

  RiskTracking track;
  track.objective = problem.objective;
  track.optimum_value = problem.spec.optimum_value;
  track.G = problem.spec.G;
  track.lambda = problem.spec.lambda;

  std::vector<ResultRow> rows;
  for (const Algorithm algo : cfg.algorithms) {
    for (const std::int64_t T : cfg.budgets) {
      for (int r = 0; r < cfg.repetitions; ++r) {
        const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(r);
        ResultRow row;
        row.algorithm = to_string(algo);
        row.T = T;
        row.seed = seed;
        try {
          Rng rng(seed);
          GradientOracle oracle(problem.gradient, problem.bound_g);
          Domain domain = make_domain(cfg, problem.dim);
          const SymMatrix w0(problem.dim);

          const auto started = std::chrono::steady_clock::now();
          RunTrace trace;
          switch (algo) {
            case Algorithm::kLogT: {
              HyperParams params = theorem1_params(problem.spec, T);
              if (cfg.overrides.eta) params.eta = *cfg.overrides.eta;
              if (cfg.overrides.M) params.M = *cfg.overrides.M;
              if (cfg.overrides.B1) params.B1 = *cfg.overrides.B1;
              params.validate();
              trace = logt_solve(oracle, domain, params, w0, rng, track);
              break;
            }
            case Algorithm::kEpochGd:
              trace = epoch_gd_solve(oracle, domain, problem.spec, T, w0, rng, track);
              break;
            case Algorithm::kSgd:
              trace = sgd_solve(oracle, domain, problem.spec.lambda, T, w0, rng, track);
              break;
          }
          const double elapsed =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

          row.final_objective = problem.objective(trace.final_iterate);
          if (problem.spec.optimum_value) {
            row.excess_risk = row.final_objective - *problem.spec.optimum_value;
            row.excess_times_T = *row.excess_risk * static_cast<double>(T);
          }
          row.total_projections = trace.total_projections;
          row.total_oracle_calls = trace.total_oracle_calls;
          row.wall_time_seconds = cfg.record_wall_time ? elapsed : 0.0;
          if (traces) traces->push_back(std::move(trace));
        } catch (const Error& e) {
          std::cerr << "warning: cell (" << row.algorithm << ", T=" << T << ", seed=" << seed
                    << ") failed: " << e.what() << "\n";
          row.failed = true;
          row.final_objective = kNaN;
          if (traces) traces->push_back(RunTrace{});
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_raw_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kRawCsvHeader << "\n";
  for (const auto& row : rows) {
    out << row.algorithm << ',' << row.T << ',' << row.seed << ',' << fmt(row.final_objective)
        << ',' << fmt_opt(row.excess_risk) << ',' << fmt_opt(row.excess_times_T) << ','
        << row.total_projections << ',' << row.total_oracle_calls << ','
        << fmt(row.wall_time_seconds) << "\n";
  }
}

std::string raw_csv_string(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_raw_csv(rows, out);
  return out.str();
}

std::vector<ResultRow> read_raw_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("raw csv: empty input");
  if (line == std::string(kRawCsvHeader) + "\r") line.pop_back();
  if (line != kRawCsvHeader) throw ParseError("raw csv: unexpected header '" + line + "'");

  std::vector<ResultRow> rows;
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() != 9) {
      throw ParseError("raw csv line " + std::to_string(line_no) + ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    }
    try {
      ResultRow row;
      row.algorithm = fields[0];
      row.T = std::stoll(fields[1]);
      row.seed = std::stoull(fields[2]);
      row.final_objective = std::stod(fields[3]);
      if (!fields[4].empty()) row.excess_risk = std::stod(fields[4]);
      if (!fields[5].empty()) row.excess_times_T = std::stod(fields[5]);
      row.total_projections = std::stoll(fields[6]);
      row.total_oracle_calls = std::stoll(fields[7]);
      row.wall_time_seconds = std::stod(fields[8]);
      row.failed = std::isnan(row.final_objective);
      rows.push_back(std::move(row));
    } catch (const std::exception&) {
      throw ParseError("raw csv line " + std::to_string(line_no) + ": bad field");
    }
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  struct Group {
    std::vector<const ResultRow*> members;
  };
  std::vector<std::pair<std::string, std::int64_t>> order;
  std::map<std::pair<std::string, std::int64_t>, Group> groups;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.algorithm, row.T);
    if (!groups.count(key)) order.push_back(key);
    groups[key].members.push_back(&row);
  }

  std::vector<SummaryRow> out;
  for (const auto& key : order) {
    std::vector<double> objective, excess, excess_t, projections, calls, wall;
    for (const ResultRow* row : groups[key].members) {
      if (row->failed) continue;
      objective.push_back(row->final_objective);
      if (row->excess_risk) excess.push_back(*row->excess_risk);
      if (row->excess_times_T) excess_t.push_back(*row->excess_times_T);
      projections.push_back(static_cast<double>(row->total_projections));
      calls.push_back(static_cast<double>(row->total_oracle_calls));
      wall.push_back(row->wall_time_seconds);
    }
    if (objective.empty()) {
      std::cerr << "warning: group (" << key.first << ", T=" << key.second
                << ") has no successful rows; skipped\n";
      continue;
    }
    SummaryRow s;
    s.algorithm = key.first;
    s.T = key.second;
    s.repetitions = static_cast<int>(objective.size());
    s.mean_final_objective = mean_of(objective);
    s.std_final_objective = sample_std(objective, s.mean_final_objective);
    if (excess.size() == objective.size()) {
      s.mean_excess_risk = mean_of(excess);
      s.std_excess_risk = sample_std(excess, *s.mean_excess_risk);
      s.mean_excess_times_T = mean_of(excess_t);
      s.std_excess_times_T = sample_std(excess_t, *s.mean_excess_times_T);
    }
    s.mean_total_projections = mean_of(projections);
    s.mean_total_oracle_calls = mean_of(calls);
    s.mean_wall_time_seconds = mean_of(wall);
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << kSummaryCsvHeader << "\n";
  for (const auto& s : rows) {
    out << s.algorithm << ',' << s.T << ',' << s.repetitions << ',' << fmt(s.mean_final_objective)
        << ',' << fmt(s.std_final_objective) << ',' << fmt_opt(s.mean_excess_risk) << ','
        << fmt_opt(s.std_excess_risk) << ',' << fmt_opt(s.mean_excess_times_T) << ','
        << fmt_opt(s.std_excess_times_T) << ',' << fmt(s.mean_total_projections) << ','
        << fmt(s.mean_total_oracle_calls) << ',' << fmt(s.mean_wall_time_seconds) << "\n";
  }
}

}  // namespace logt
