#include "logt/optim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "logt/errors.hpp"

namespace logt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SymMatrix feasible_start(Domain& domain, const SymMatrix& w0) {
  if (w0.dim() != domain.dim()) {
    throw ConfigError("initial iterate dim does not match domain dim");
  }
  return domain.contains(w0, 1e-9) ? w0 : domain.project(w0);
}

/// ~32 logarithmically spaced step indices in [1, T], always including T.
std::vector<std::int64_t> log_spaced_steps(std::int64_t T, int points = 32) {
  std::vector<std::int64_t> steps;
  for (int i = 0; i <= points; ++i) {
    const double f = std::pow(static_cast<double>(T), static_cast<double>(i) / points);
    const auto s = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(f)));
    if (steps.empty() || s > steps.back()) steps.push_back(std::min(s, T));
  }
  if (steps.back() != T) steps.push_back(T);
  return steps;
}

}  // namespace

void HyperParams::validate() const {
  if (!(eta > 0.0)) throw ConfigError("HyperParams: eta must be positive");
  if (M < 1 || B1 < 1 || T < 1) throw ConfigError("HyperParams: M, B1 and T must be >= 1");
  if (2 * M * B1 > T) {
    throw ConfigError("HyperParams: budget T = " + std::to_string(T) +
                      " cannot fit one epoch of 2*M*B1 = " + std::to_string(2 * M * B1) +
                      " oracle calls");
  }
}

std::vector<ScheduleEntry> epoch_schedule(std::int64_t M, std::int64_t B1, std::int64_t T) {
  if (M < 1 || B1 < 1 || T < 1) throw ConfigError("epoch_schedule: M, B1 and T must be >= 1");
  std::vector<ScheduleEntry> plan;
  std::int64_t batch = B1;
  std::int64_t cum = 0;
  for (int k = 1;; ++k) {
    const std::int64_t calls = 2 * M * batch;
    if (calls / (2 * M) != batch || cum > T - calls) break;  // overflow or budget exhausted
    cum += calls;
    plan.push_back({k, batch, cum});
    if (batch > T) break;
    batch *= 2;
  }
  return plan;
}

HyperParams theorem1_params(const ProblemSpec& spec, std::int64_t T) {
  spec.validate();
  HyperParams p;
  p.eta = 1.0 / (std::sqrt(6.0) * spec.L);
  p.M = static_cast<std::int64_t>(std::ceil(4.0 / (p.eta * spec.lambda)));
  p.B1 = static_cast<std::int64_t>(std::ceil(12.0 * p.eta * spec.lambda));
  p.T = T;
  p.validate();
  return p;
}

HighProbParams theorem2_alpha(double delta, std::int64_t T, std::int64_t M, double eta,
                              double lambda) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("theorem2_alpha: delta must be in (0,1)");
  if (M < 1 || T < 1 || !(eta > 0.0) || !(lambda > 0.0)) {
    throw ConfigError("theorem2_alpha: invalid inputs");
  }
  const auto n_term = static_cast<std::int64_t>(
      std::ceil(std::log2(4.0 * static_cast<double>(M) * static_cast<double>(T) / (eta * lambda))));

  const auto alpha_for = [&](double delta_tilde) {
    const double l8m = std::log(8.0 * static_cast<double>(M) / delta_tilde);
    const double l4n = std::log(4.0 * static_cast<double>(n_term) / delta_tilde);
    const double a1 = 400.0 * l8m * l8m;
    const double a2 = 1.0 + 64.0 * l8m * l8m * (l4n + (4.0 / 9.0) * l4n * l4n);
    return std::max(a1, a2);
  };
  const auto k_for = [&](double alpha) {
    return static_cast<std::int64_t>(
        std::floor(std::log2(static_cast<double>(T) / (8.0 * alpha) + 1.0)));
  };

  std::int64_t k = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(std::log2(static_cast<double>(T) / 8.0 + 1.0))));
  std::int64_t prev = -1;
  for (int iter = 0; iter < 100; ++iter) {
    const double delta_tilde = delta / static_cast<double>(k);
    const double alpha = alpha_for(delta_tilde);
    // delta_tilde = delta/k_dagger needs k_dagger >= 1; whether the
    // implied first epoch actually fits the budget is checked by
    // theorem2_params, not here.
    const std::int64_t k_new = std::max<std::int64_t>(1, k_for(alpha));
    if (k_new == k) return {delta, alpha, k, n_term, delta_tilde};
    if (k_new == prev) {
      throw NumericalError("theorem2_alpha: no fixed point; k oscillates between " +
                           std::to_string(k_new) + " and " + std::to_string(k));
    }
    prev = k;
    k = k_new;
  }
  throw NumericalError("theorem2_alpha: fixed-point iteration did not settle in 100 rounds");
}

HyperParams theorem2_params(const ProblemSpec& spec, std::int64_t T, double delta) {
  spec.validate();
  HyperParams p;
  p.eta = 1.0 / (std::sqrt(6.0) * spec.L);
  p.M = static_cast<std::int64_t>(std::ceil(4.0 / (p.eta * spec.lambda)));
  const HighProbParams hp = theorem2_alpha(delta, T, p.M, p.eta, spec.lambda);
  p.B1 = static_cast<std::int64_t>(std::ceil(hp.alpha * p.eta * spec.lambda));
  p.T = T;
  p.validate();
  return p;
}

RunTrace logt_solve(GradientOracle& oracle, Domain& domain, const HyperParams& params,
                    const SymMatrix& w0, Rng& rng, const RiskTracking& track) {
  params.validate();
  const auto start = Clock::now();
  const std::int64_t calls0 = oracle.call_count();
  const std::int64_t proj0 = domain.projection_count();

  const auto plan = epoch_schedule(params.M, params.B1, params.T);
  SymMatrix w = feasible_start(domain, w0);

  RunTrace trace;
  trace.epochs.reserve(plan.size());
  for (const auto& entry : plan) {
    EpochRecord rec;
    rec.k = entry.k;
    rec.batch_size = entry.batch_size;
    rec.oracle_calls_in_epoch = 2 * params.M * entry.batch_size;
    rec.projections_in_epoch = 2 * params.M;
    rec.epoch_start_iterate = w;
    if (track.G && track.lambda) {
      rec.risk_budget = std::ldexp(*track.G * *track.G / *track.lambda, 2 - entry.k);
    }
    if (track.objective && track.optimum_value) {
      rec.measured_excess_risk = track.objective(w) - *track.optimum_value;
    }

    SymMatrix probe_sum(w.dim());
    for (std::int64_t t = 0; t < params.M; ++t) {
      const SymMatrix g = oracle.average_gradient(w, entry.batch_size, rng);
      const SymMatrix z = domain.project(axpy(-params.eta, g, w));
      const SymMatrix f = oracle.average_gradient(z, entry.batch_size, rng);
      // The second update steps from w, not from the probe point z.
      w = domain.project(axpy(-params.eta, f, w));
      probe_sum.add_scaled(1.0, z);
    }
    probe_sum.scale(1.0 / static_cast<double>(params.M));
    w = probe_sum;

    trace.epochs.push_back(std::move(rec));
    if (track.objective) {
      trace.checkpoints.push_back({oracle.call_count() - calls0,
                                   domain.projection_count() - proj0, track.objective(w)});
    }
  }

  trace.final_iterate = std::move(w);
  trace.total_oracle_calls = oracle.call_count() - calls0;
  trace.total_projections = domain.projection_count() - proj0;
  trace.wall_time_seconds = seconds_since(start);
  return trace;
}

RunTrace epoch_gd_solve(GradientOracle& oracle, Domain& domain, const ProblemSpec& spec,
                        std::int64_t T, const SymMatrix& w0, Rng& rng,
                        const RiskTracking& track) {
  spec.validate();
  if (T < 1) throw ConfigError("epoch_gd_solve: T must be >= 1");
  const auto start = Clock::now();
  const std::int64_t calls0 = oracle.call_count();
  const std::int64_t proj0 = domain.projection_count();

  constexpr std::int64_t kFirstEpochSteps = 16;
  const auto marks = log_spaced_steps(T);
  std::size_t next_mark = 0;

  SymMatrix w = feasible_start(domain, w0);
  RunTrace trace;
  double eta = 1.0 / spec.lambda;
  std::int64_t epoch_steps = kFirstEpochSteps;
  std::int64_t used = 0;
  while (used < T) {
    // The final epoch is truncated so the whole budget is spent; unlike
    // the batched solver this baseline has no per-epoch call quantum.
    const std::int64_t steps = std::min(epoch_steps, T - used);
    SymMatrix iterate_sum(w.dim());
    for (std::int64_t t = 0; t < steps; ++t) {
      const SymMatrix g = oracle.sample(w, rng);
      w = domain.project(axpy(-eta, g, w));
      ++used;
      iterate_sum.add_scaled(1.0, w);
      if (track.objective && next_mark < marks.size() && used == marks[next_mark]) {
        trace.checkpoints.push_back({used, used, track.objective(w)});
        ++next_mark;
      }
    }
    iterate_sum.scale(1.0 / static_cast<double>(steps));
    w = iterate_sum;
    epoch_steps *= 2;
    eta *= 0.5;
  }

  trace.final_iterate = w;
  trace.total_oracle_calls = oracle.call_count() - calls0;
  trace.total_projections = domain.projection_count() - proj0;
  if (track.objective) {
    // Final checkpoint reflects the returned (epoch-averaged) iterate.
    const Checkpoint final_cp{trace.total_oracle_calls, trace.total_projections,
                              track.objective(w)};
    if (!trace.checkpoints.empty() &&
        trace.checkpoints.back().oracle_calls == final_cp.oracle_calls) {
      trace.checkpoints.back() = final_cp;
    } else {
      trace.checkpoints.push_back(final_cp);
    }
  }
  trace.wall_time_seconds = seconds_since(start);
  return trace;
}

RunTrace sgd_solve(GradientOracle& oracle, Domain& domain, double lambda, std::int64_t T,
                   const SymMatrix& w0, Rng& rng, const RiskTracking& track) {
  if (!(lambda > 0.0)) throw ConfigError("sgd_solve: lambda must be positive");
  if (T < 1) throw ConfigError("sgd_solve: T must be >= 1");
  const auto start = Clock::now();
  const std::int64_t calls0 = oracle.call_count();
  const std::int64_t proj0 = domain.projection_count();

  const auto marks = log_spaced_steps(T);
  std::size_t next_mark = 0;

  SymMatrix w = feasible_start(domain, w0);
  RunTrace trace;
  for (std::int64_t t = 1; t <= T; ++t) {
    const SymMatrix g = oracle.sample(w, rng);
    w = domain.project(axpy(-1.0 / (lambda * static_cast<double>(t)), g, w));
    if (track.objective && next_mark < marks.size() && t == marks[next_mark]) {
      trace.checkpoints.push_back({t, t, track.objective(w)});
      ++next_mark;
    }
  }

  trace.final_iterate = std::move(w);
  trace.total_oracle_calls = oracle.call_count() - calls0;
  trace.total_projections = domain.projection_count() - proj0;
  trace.wall_time_seconds = seconds_since(start);
  return trace;
}

}  // namespace logt
