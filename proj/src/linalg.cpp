#include "logt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "logt/errors.hpp"

namespace logt {

namespace {

void check_dim(int dim) {
  if (dim <= 0) throw ConfigError("SymMatrix dimension must be positive, got " + std::to_string(dim));
}

void check_same_dim(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) {
    throw ConfigError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                      std::to_string(y.dim()));
  }
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  e_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix::SymMatrix(int dim, std::vector<double> entries) : dim_(dim), e_(std::move(entries)) {
  check_dim(dim);
  const std::size_t n = static_cast<std::size_t>(dim);
  if (e_.size() != n * n) throw ConfigError("SymMatrix entry count does not match dim*dim");
  for (double v : e_) {
    if (!std::isfinite(v)) throw ConfigError("SymMatrix entries must be finite");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const double m = 0.5 * (e_[i * n + j] + e_[j * n + i]);
      e_[i * n + j] = m;
      e_[j * n + i] = m;
    }
  }
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix a(dim);
  for (int i = 0; i < dim; ++i) a.set(i, i, 1.0);
  return a;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  SymMatrix a(static_cast<int>(diag.size()));
  for (int i = 0; i < a.dim(); ++i) a.set(i, i, diag[static_cast<std::size_t>(i)]);
  return a;
}

void SymMatrix::add_scaled(double a, const SymMatrix& x) {
  check_same_dim(*this, x);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += a * x.e_[i];
}

void SymMatrix::scale(double a) {
  for (double& v : e_) v *= a;
}

double frob_norm(const SymMatrix& a) {
  double s = 0.0;
  for (double v : a.entries()) s += v * v;
  return std::sqrt(s);
}

double dot(const SymMatrix& x, const SymMatrix& y) {
  check_same_dim(x, y);
  double s = 0.0;
  const auto& xe = x.entries();
  const auto& ye = y.entries();
  for (std::size_t i = 0; i < xe.size(); ++i) s += xe[i] * ye[i];
  return s;
}

double trace_of(const SymMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

SymMatrix axpy(double a, const SymMatrix& x, const SymMatrix& y) {
  check_same_dim(x, y);
  SymMatrix r = y;
  r.add_scaled(a, x);
  return r;
}

EigDecomposition sym_eig(const SymMatrix& input) {
  const int n = input.dim();
  const std::size_t ns = static_cast<std::size_t>(n);
  std::vector<double> a = input.entries();
  std::vector<double> v(ns * ns, 0.0);
  for (int i = 0; i < n; ++i) v[i * ns + i] = 1.0;

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a[p * ns + q] * a[p * ns + q];
    return std::sqrt(2.0 * s);
  };

  const double scale = frob_norm(input);
  const double tol = 1e-10 * scale;
  constexpr int kMaxSweeps = 100;

  bool converged = (off_norm() <= tol);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * ns + q];
        if (apq == 0.0) continue;
        const double app = a[p * ns + p];
        const double aqq = a[q * ns + q];
        // Skip rotations that are pure roundoff relative to the diagonal.
        if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a[p * ns + q] = 0.0;
          a[q * ns + p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;  // avoids theta*theta overflow
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * ns + p] = app - t * apq;
        a[q * ns + q] = aqq + t * apq;
        a[p * ns + q] = 0.0;
        a[q * ns + p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i * ns + p];
          const double aiq = a[i * ns + q];
          a[i * ns + p] = c * aip - s * aiq;
          a[p * ns + i] = a[i * ns + p];
          a[i * ns + q] = c * aiq + s * aip;
          a[q * ns + i] = a[i * ns + q];
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v[i * ns + p];
          const double viq = v[i * ns + q];
          v[i * ns + p] = c * vip - s * viq;
          v[i * ns + q] = c * viq + s * vip;
        }
      }
    }
    converged = (off_norm() <= tol);
  }
  if (!converged) {
    throw NumericalError("Jacobi eigensolver did not converge after " +
                         std::to_string(kMaxSweeps) +
                         " sweeps; off-diagonal norm = " + std::to_string(off_norm()));
  }

  std::vector<int> order(ns);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x * ns + x] < a[y * ns + y]; });

  EigDecomposition eig;
  eig.dim = n;
  eig.eigenvalues.resize(ns);
  eig.eigenvectors.resize(ns * ns);
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    eig.eigenvalues[static_cast<std::size_t>(c)] = a[src * ns + src];
    for (int i = 0; i < n; ++i) eig.eigenvectors[i * ns + c] = v[i * ns + src];
  }
  return eig;
}

}  // namespace logt
