#include "logt/oracle.hpp"

#include <cmath>
#include <string>

#include "logt/errors.hpp"

namespace logt {

void ProblemSpec::validate() const {
  if (!(lambda > 0.0)) throw ConfigError("ProblemSpec: lambda must be positive");
  if (!(L >= lambda)) throw ConfigError("ProblemSpec: L must be >= lambda");
  if (G && !(*G > 0.0)) throw ConfigError("ProblemSpec: G must be positive when given");
}

GradientOracle::GradientOracle(GradientFn fn, std::optional<double> bound_g)
    : fn_(std::move(fn)), bound_g_(bound_g) {
  if (!fn_) throw ConfigError("GradientOracle: gradient function must be set");
  if (bound_g_ && !(*bound_g_ > 0.0)) throw ConfigError("GradientOracle: bound G must be positive");
}

SymMatrix GradientOracle::sample(const SymMatrix& w, Rng& rng) {
  ++call_count_;
  SymMatrix g = fn_(w, rng);
  if (bound_g_) {
    const double norm = frob_norm(g);
    if (norm > *bound_g_ + 1e-9) {
      throw NumericalError("stochastic gradient norm " + std::to_string(norm) +
                           " exceeds declared bound G = " + std::to_string(*bound_g_));
    }
  }
  return g;
}

SymMatrix GradientOracle::average_gradient(const SymMatrix& w, std::int64_t batch, Rng& rng) {
  if (batch < 1) throw ConfigError("average_gradient: batch size must be >= 1");
  SymMatrix acc = sample(w, rng);
  for (std::int64_t i = 1; i < batch; ++i) acc.add_scaled(1.0, sample(w, rng));
  acc.scale(1.0 / static_cast<double>(batch));
  return acc;
}

}  // namespace logt
