#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "logt/linalg.hpp"
#include "logt/rng.hpp"

namespace logt {

/// Problem constants consumed by the parameter calculators and the
/// solvers: strong-convexity modulus lambda, smoothness constant L,
/// an optional gradient bound G, and optional knowledge of the optimum
/// for excess-risk reporting.
struct ProblemSpec {
  double lambda = 0.0;
  double L = 0.0;
  std::optional<double> G;
  std::optional<double> optimum_value;
  std::function<double(const SymMatrix&)> exact_objective;

  void validate() const;
};

/// Unbiased stochastic gradient oracle with call accounting. When a bound
/// G is declared, every raw sample is checked against it (never clipped);
/// a violation throws NumericalError.
class GradientOracle {
 public:
  using GradientFn = std::function<SymMatrix(const SymMatrix& w, Rng& rng)>;

  explicit GradientOracle(GradientFn fn, std::optional<double> bound_g = std::nullopt);

  /// One stochastic gradient at w; call_count += 1.
  SymMatrix sample(const SymMatrix& w, Rng& rng);

  /// Arithmetic mean of batch independent samples at w; call_count += batch.
  SymMatrix average_gradient(const SymMatrix& w, std::int64_t batch, Rng& rng);

  std::int64_t call_count() const { return call_count_; }
  std::optional<double> bound_g() const { return bound_g_; }

 private:
  GradientFn fn_;
  std::optional<double> bound_g_;
  std::int64_t call_count_ = 0;
};

}  // namespace logt
