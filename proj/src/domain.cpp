#include "logt/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logt/errors.hpp"

namespace logt {

namespace {

SymMatrix clamp_negative_eigenvalues(const SymMatrix& x) {
  const auto eig = sym_eig(x);
  if (eig.eigenvalues.front() >= 0.0) return x;  // already in the cone
  const int n = x.dim();
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int c = 0; c < n; ++c) {
    const double lam = std::max(eig.eigenvalues[static_cast<std::size_t>(c)], 0.0);
    if (lam == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double li = lam * eig.vec(i, c);
      for (int j = i; j < n; ++j) {
        out[static_cast<std::size_t>(i) * n + j] += li * eig.vec(j, c);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out[static_cast<std::size_t>(j) * n + i] = out[static_cast<std::size_t>(i) * n + j];
  return SymMatrix(n, std::move(out));
}

SymMatrix clip_to_ball(const SymMatrix& x, double radius) {
  const double norm = frob_norm(x);
  if (norm <= radius) return x;
  SymMatrix r = x;
  r.scale(radius / norm);
  return r;
}

double min_eigenvalue(const SymMatrix& x) { return sym_eig(x).eigenvalues.front(); }

}  // namespace

Domain::Domain(DomainKind kind, int dim, double radius)
    : kind_(kind), dim_(dim), radius_(radius) {
  if (dim <= 0) throw ConfigError("Domain dimension must be positive");
  if ((kind == DomainKind::kPsdConeCapped || kind == DomainKind::kFrobBall) && radius <= 0.0) {
    throw ConfigError("Domain radius must be positive");
  }
}

Domain Domain::psd_cone(int dim) { return Domain(DomainKind::kPsdCone, dim, 0.0); }

Domain Domain::psd_cone_capped(int dim, double radius) {
  return Domain(DomainKind::kPsdConeCapped, dim, radius);
}

Domain Domain::frob_ball(int dim, double radius) {
  return Domain(DomainKind::kFrobBall, dim, radius);
}

Domain Domain::unconstrained(int dim) { return Domain(DomainKind::kUnconstrained, dim, 0.0); }

SymMatrix Domain::project(const SymMatrix& x) {
  if (x.dim() != dim_) {
    throw ConfigError("projection input dim " + std::to_string(x.dim()) +
                      " does not match domain dim " + std::to_string(dim_));
  }
  ++projection_count_;
  switch (kind_) {
    case DomainKind::kUnconstrained:
      return x;
    case DomainKind::kFrobBall:
      return clip_to_ball(x, radius_);
    case DomainKind::kPsdCone:
      return clamp_negative_eigenvalues(x);
    case DomainKind::kPsdConeCapped:
      return clip_to_ball(clamp_negative_eigenvalues(x), radius_);
  }
  throw ConfigError("unknown domain kind");
}

bool Domain::contains(const SymMatrix& x, double tol) const {
  if (x.dim() != dim_) return false;
  switch (kind_) {
    case DomainKind::kUnconstrained:
      return true;
    case DomainKind::kFrobBall:
      return frob_norm(x) <= radius_ + tol;
    case DomainKind::kPsdCone:
      return min_eigenvalue(x) >= -tol;
    case DomainKind::kPsdConeCapped:
      return min_eigenvalue(x) >= -tol && frob_norm(x) <= radius_ + tol;
  }
  return false;
}

}  // namespace logt
