#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logt/data.hpp"
#include "logt/linalg.hpp"
#include "logt/oracle.hpp"
#include "logt/rng.hpp"

namespace logt {

/// F(W) = 1/2 ||W||_F^2 over the PSD cone; the oracle returns W + Z with
/// Z symmetric, entries uniform in [-1,1]. The optimum is the zero matrix.
struct QuadraticPsdProblem {
  int dim = 5;

  ProblemSpec spec() const;

  /// Gradient bound valid when iterates stay in a Frobenius ball of the
  /// given radius: radius + ||Z||_F <= radius + dim.
  double gradient_bound(double domain_radius) const { return domain_radius + dim; }

  GradientOracle::GradientFn gradient_fn() const;
};

/// Symmetric noise draw: upper triangle including the diagonal is i.i.d.
/// uniform[-1,1], mirrored below.
SymMatrix quad_noise(int dim, Rng& rng);

SymMatrix quad_oracle_sample(const SymMatrix& w, Rng& rng);

double quad_objective(const SymMatrix& w);

/// Gradient of log(1+exp(-z)) with z = y*(1 - d^T M d), d = x_i - x_j,
/// plus the ridge term reg_lambda * M.
SymMatrix metric_pair_gradient(const SymMatrix& m, std::span<const double> xi,
                               std::span<const double> xj, int y, double reg_lambda);

/// Regularized Mahalanobis metric learning over labeled pairs drawn from
/// a dataset. Features are expected in [0,1] (see normalize_unit_range).
/// The held-out evaluation pairs come from a dedicated RNG stream so
/// training draws never perturb them.
class MetricLearningProblem {
 public:
  MetricLearningProblem(Dataset ds, double reg_lambda, std::uint64_t seed,
                        std::int64_t num_test_pairs = 10000);

  const Dataset& dataset() const { return ds_; }
  double reg_lambda() const { return reg_lambda_; }
  ProblemSpec spec() const { return spec_; }
  std::int64_t num_test_pairs() const { return static_cast<std::int64_t>(test_pairs_.size()); }

  GradientOracle::GradientFn gradient_fn() const;

  /// Mean logit loss over the fixed test pairs plus the ridge term;
  /// deterministic given the construction seed.
  double objective_estimate(const SymMatrix& m) const;

  /// Fraction of test pairs with matching labels.
  double same_label_fraction() const;

 private:
  Dataset ds_;
  double reg_lambda_;
  std::vector<PairDraw> test_pairs_;
  ProblemSpec spec_;
};

}  // namespace logt
