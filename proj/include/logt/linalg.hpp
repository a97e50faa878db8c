#pragma once

#include <vector>

namespace logt {

/// Dense n x n real symmetric matrix, stored as a full square, row-major.
/// Construction symmetrizes the input as (A + A^T)/2, so the symmetry
/// invariant holds even when the caller hands in slightly asymmetric data.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);
  SymMatrix(int dim, std::vector<double> entries);

  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const std::vector<double>& diag);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

  /// Sets both (i,j) and (j,i).
  void set(int i, int j, double v) {
    e_[static_cast<std::size_t>(i) * dim_ + j] = v;
    e_[static_cast<std::size_t>(j) * dim_ + i] = v;
  }

  const std::vector<double>& entries() const { return e_; }

  /// *this += a * x
  void add_scaled(double a, const SymMatrix& x);
  void scale(double a);

 private:
  int dim_ = 0;
  std::vector<double> e_;
};

double frob_norm(const SymMatrix& a);
double dot(const SymMatrix& x, const SymMatrix& y);
double trace_of(const SymMatrix& a);

/// a * x + y, elementwise.
SymMatrix axpy(double a, const SymMatrix& x, const SymMatrix& y);

/// Eigendecomposition of a symmetric matrix: A = V diag(lambda) V^T with
/// eigenvalues ascending and column c of V paired with eigenvalues[c].
struct EigDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // row-major dim x dim

  double vec(int i, int c) const { return eigenvectors[static_cast<std::size_t>(i) * dim + c]; }
};

/// Cyclic Jacobi rotations. Converged when the off-diagonal Frobenius norm
/// drops below 1e-10 * ||A||_F; throws NumericalError after 100 sweeps.
EigDecomposition sym_eig(const SymMatrix& a);

}  // namespace logt
