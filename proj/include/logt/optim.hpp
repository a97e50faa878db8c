#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "logt/domain.hpp"
#include "logt/linalg.hpp"
#include "logt/oracle.hpp"
#include "logt/rng.hpp"

namespace logt {

/// Inputs of the epoch-based extra-gradient solver: step size eta,
/// updates per epoch M, initial batch size B1, oracle-call budget T.
struct HyperParams {
  double eta = 0.0;
  std::int64_t M = 0;
  std::int64_t B1 = 0;
  std::int64_t T = 0;

  /// Throws ConfigError unless eta > 0, M,B1,T >= 1 and 2*M*B1 <= T.
  void validate() const;
};

struct EpochRecord {
  int k = 0;  // 1-based epoch index
  std::int64_t batch_size = 0;
  std::int64_t oracle_calls_in_epoch = 0;
  std::int64_t projections_in_epoch = 0;
  SymMatrix epoch_start_iterate;
  std::optional<double> risk_budget;          // G^2 / (lambda * 2^(k-2))
  std::optional<double> measured_excess_risk;  // F(epoch_start_iterate) - F*
};

/// Objective value sampled along a run; baselines checkpoint at
/// logarithmically spaced steps, the epoch solver at epoch boundaries.
struct Checkpoint {
  std::int64_t oracle_calls = 0;
  std::int64_t projections = 0;
  double objective = 0.0;
};

struct RunTrace {
  std::vector<EpochRecord> epochs;  // filled by logt_solve only
  std::vector<Checkpoint> checkpoints;
  SymMatrix final_iterate;
  std::int64_t total_oracle_calls = 0;
  std::int64_t total_projections = 0;
  double wall_time_seconds = 0.0;
};

/// Optional instrumentation: when `objective` is set, runs record
/// checkpoints; with `optimum_value` also set, per-epoch excess risk is
/// recorded; G and lambda enable the per-epoch risk budgets.
struct RiskTracking {
  std::function<double(const SymMatrix&)> objective;
  std::optional<double> optimum_value;
  std::optional<double> G;
  std::optional<double> lambda;
};

struct ScheduleEntry {
  int k = 0;
  std::int64_t batch_size = 0;
  std::int64_t cumulative_calls = 0;
};

/// The epochs the solver will run: epoch k uses batch size B1*2^(k-1) and
/// 2*M*B1*2^(k-1) oracle calls; epochs fit while cumulative calls <= T.
std::vector<ScheduleEntry> epoch_schedule(std::int64_t M, std::int64_t B1, std::int64_t T);

/// eta = 1/(sqrt(6) L), M = ceil(4/(eta lambda)), B1 = ceil(12 eta lambda).
HyperParams theorem1_params(const ProblemSpec& spec, std::int64_t T);

struct HighProbParams {
  double delta = 0.0;
  double alpha = 0.0;
  std::int64_t k_dagger = 0;
  std::int64_t N = 0;
  double delta_tilde = 0.0;
};

/// Resolves the mutually dependent (alpha, k_dagger) pair by fixed-point
/// iteration starting from k = floor(log2(T/8 + 1)).
HighProbParams theorem2_alpha(double delta, std::int64_t T, std::int64_t M, double eta,
                              double lambda);

/// High-probability parameter choice: Theorem-1 eta and M with
/// B1 = ceil(alpha * eta * lambda). Throws ConfigError when the resulting
/// first epoch does not fit the budget.
HyperParams theorem2_params(const ProblemSpec& spec, std::int64_t T, double delta);

/// Epoch-based mini-batch extra-gradient solver. Per inner iteration:
/// probe step z = P(w - eta*avg_grad(w)), then the real step from w,
/// w <- P(w - eta*avg_grad(z)). Epoch output is the mean of the probe
/// iterates; batch size doubles between epochs.
RunTrace logt_solve(GradientOracle& oracle, Domain& domain, const HyperParams& params,
                    const SymMatrix& w0, Rng& rng, const RiskTracking& track = {});

/// Baseline: epoch gradient descent. Epoch k runs 16*2^(k-1) single-sample
/// steps with step size (1/lambda)/2^(k-1); the next epoch starts from the
/// epoch's iterate average. The final epoch is truncated so exactly T
/// oracle calls (and T projections) are made.
RunTrace epoch_gd_solve(GradientOracle& oracle, Domain& domain, const ProblemSpec& spec,
                        std::int64_t T, const SymMatrix& w0, Rng& rng,
                        const RiskTracking& track = {});

/// Baseline: SGD with step size 1/(lambda*t); returns the final iterate.
RunTrace sgd_solve(GradientOracle& oracle, Domain& domain, double lambda, std::int64_t T,
                   const SymMatrix& w0, Rng& rng, const RiskTracking& track = {});

}  // namespace logt
