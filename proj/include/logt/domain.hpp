#pragma once

#include <cstdint>

#include "logt/linalg.hpp"

namespace logt {

enum class DomainKind {
  kPsdCone,
  kPsdConeCapped,  // PSD cone intersected with a Frobenius ball
  kFrobBall,
  kUnconstrained,
};

/// Feasible set with a Euclidean (Frobenius-metric) projection operator.
/// The projection counter is the only mutable state; an instance belongs
/// to a single run.
class Domain {
 public:
  static Domain psd_cone(int dim);
  static Domain psd_cone_capped(int dim, double radius);
  static Domain frob_ball(int dim, double radius);
  static Domain unconstrained(int dim);

  /// Nearest feasible point; increments the projection counter by one.
  /// Negative eigenvalues are clamped to exactly 0.
  SymMatrix project(const SymMatrix& x);

  /// True iff x is within tol of the feasible set.
  bool contains(const SymMatrix& x, double tol) const;

  DomainKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  std::int64_t projection_count() const { return projection_count_; }

 private:
  Domain(DomainKind kind, int dim, double radius);

  DomainKind kind_;
  int dim_;
  double radius_;
  std::int64_t projection_count_ = 0;
};

}  // namespace logt
