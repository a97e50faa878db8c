#include "logt/problems.hpp"

#include <cmath>

#include "logt/errors.hpp"

namespace logt {

namespace {

double logit_loss(double z) {
  // log(1 + exp(-z)) without overflow for large |z|
  if (z < 0.0) return -z + std::log1p(std::exp(z));
  return std::log1p(std::exp(-z));
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double pair_margin(const SymMatrix& m, std::span<const double> xi, std::span<const double> xj,
                   int y) {
  const int d = m.dim();
  double quad = 0.0;
  for (int a = 0; a < d; ++a) {
    const double da = xi[static_cast<std::size_t>(a)] - xj[static_cast<std::size_t>(a)];
    for (int b = 0; b < d; ++b) {
      const double db = xi[static_cast<std::size_t>(b)] - xj[static_cast<std::size_t>(b)];
      quad += da * m(a, b) * db;
    }
  }
  return y * (1.0 - quad);
}

}  // namespace

ProblemSpec QuadraticPsdProblem::spec() const {
  ProblemSpec s;
  s.lambda = 1.0;
  s.L = 1.0;
  s.optimum_value = 0.0;
  s.exact_objective = [](const SymMatrix& w) { return quad_objective(w); };
  return s;
}

GradientOracle::GradientFn QuadraticPsdProblem::gradient_fn() const {
  return [](const SymMatrix& w, Rng& rng) { return quad_oracle_sample(w, rng); };
}

SymMatrix quad_noise(int dim, Rng& rng) {
  SymMatrix z(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      z.set(i, j, rng.uniform(-1.0, 1.0));
    }
  }
  return z;
}

SymMatrix quad_oracle_sample(const SymMatrix& w, Rng& rng) {
  return axpy(1.0, quad_noise(w.dim(), rng), w);
}

double quad_objective(const SymMatrix& w) {
  const double n = frob_norm(w);
  return 0.5 * n * n;
}

SymMatrix metric_pair_gradient(const SymMatrix& m, std::span<const double> xi,
                               std::span<const double> xj, int y, double reg_lambda) {
  const int d = m.dim();
  if (xi.size() != static_cast<std::size_t>(d) || xj.size() != static_cast<std::size_t>(d)) {
    throw ConfigError("metric_pair_gradient: feature dim does not match metric dim");
  }
  const double z = pair_margin(m, xi, xj, y);
  const double coeff = sigmoid(-z) * y;

  SymMatrix g = m;
  g.scale(reg_lambda);
  for (int a = 0; a < d; ++a) {
    const double da = xi[static_cast<std::size_t>(a)] - xj[static_cast<std::size_t>(a)];
    for (int b = a; b < d; ++b) {
      const double db = xi[static_cast<std::size_t>(b)] - xj[static_cast<std::size_t>(b)];
      g.set(a, b, g(a, b) + coeff * da * db);
    }
  }
  return g;
}

MetricLearningProblem::MetricLearningProblem(Dataset ds, double reg_lambda, std::uint64_t seed,
                                             std::int64_t num_test_pairs)
    : ds_(std::move(ds)), reg_lambda_(reg_lambda) {
  if (!(reg_lambda_ > 0.0)) throw ConfigError("MetricLearningProblem: reg_lambda must be positive");
  if (ds_.n < 2) throw ConfigError("MetricLearningProblem: need at least two points");
  if (num_test_pairs < 1) throw ConfigError("MetricLearningProblem: need at least one test pair");

  // Dedicated stream: the tag keeps evaluation pairs disjoint in
  // randomness from any training stream seeded with `seed`.
  Rng test_rng(seed ^ 0x7e57a1d5eedULL);
  test_pairs_.reserve(static_cast<std::size_t>(num_test_pairs));
  for (std::int64_t p = 0; p < num_test_pairs; ++p) test_pairs_.push_back(draw_pair(ds_, test_rng));

  double max_dist_sq = 0.0;
  for (std::int64_t i = 0; i < ds_.n; ++i) {
    const auto xi = ds_.point(i);
    for (std::int64_t j = i + 1; j < ds_.n; ++j) {
      const auto xj = ds_.point(j);
      double dist_sq = 0.0;
      for (int f = 0; f < ds_.d; ++f) {
        const double diff = xi[static_cast<std::size_t>(f)] - xj[static_cast<std::size_t>(f)];
        dist_sq += diff * diff;
      }
      max_dist_sq = std::max(max_dist_sq, dist_sq);
    }
  }
  // Curvature of the logit loss composed with the quadratic form is at
  // most ||d||^4 / 4 per pair; the ridge adds reg_lambda.
  spec_.lambda = reg_lambda_;
  spec_.L = reg_lambda_ + 0.25 * max_dist_sq * max_dist_sq;
}

GradientOracle::GradientFn MetricLearningProblem::gradient_fn() const {
  return [this](const SymMatrix& m, Rng& rng) {
    const PairDraw pair = draw_pair(ds_, rng);
    return metric_pair_gradient(m, ds_.point(pair.i), ds_.point(pair.j), pair.y, reg_lambda_);
  };
}

double MetricLearningProblem::objective_estimate(const SymMatrix& m) const {
  double loss = 0.0;
  for (const auto& pair : test_pairs_) {
    loss += logit_loss(pair_margin(m, ds_.point(pair.i), ds_.point(pair.j), pair.y));
  }
  loss /= static_cast<double>(test_pairs_.size());
  const double norm = frob_norm(m);
  return loss + 0.5 * reg_lambda_ * norm * norm;
}

double MetricLearningProblem::same_label_fraction() const {
  std::int64_t same = 0;
  for (const auto& pair : test_pairs_) same += (pair.y == 1) ? 1 : 0;
  return static_cast<double>(same) / static_cast<double>(test_pairs_.size());
}

}  // namespace logt
