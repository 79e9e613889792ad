#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gapcert/lattice.hpp"
#include "gapcert/spin.hpp"

namespace gapcert {

struct EigenResult {
  std::vector<double> eigenvalues;   // ascending
  Matrix vectors;                    // orthonormal columns, may be empty
  std::vector<double> residual_norms;  // per pair, < 1e-8 on success
};

class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), best_residuals(std::move(residuals)) {}
  std::vector<double> best_residuals;
};

/// k smallest eigenpairs. Dense solve for small dimensions, block iteration
/// above, with a dense fallback below dimension 5000 if the iteration stalls.
EigenResult lowest_eigenvalues(const SparseHermitianOperator& h, int k);

/// Lowest eigenvalue above an exactly expected_kernel_dim-fold kernel.
/// Throws if the spectrum does not show that kernel dimension.
double gap_above_kernel(const SparseHermitianOperator& h, int expected_kernel_dim);

/// Orthonormal basis of the span of eigenvectors with eigenvalue < tol.
Matrix kernel_basis(const SparseHermitianOperator& h, double tol = 1e-8);

struct SubspacePair {
  Eigen::Index ambient_dim = 0;
  Matrix basis_1, basis_2;           // orthonormal columns
  std::vector<double> singular_values;  // of basis_1^dagger basis_2, descending
};

SubspacePair subspace_pair(const Matrix& basis_1, const Matrix& basis_2);

/// Largest principal-angle cosine strictly below the intersection cluster
/// (values above 1 - 1e-9 count as intersection). Throws if a value falls in
/// the ambiguous band between 1 - 1e-6 and 1 - 1e-9.
double epsilon_from_singular_values(const std::vector<double>& svals);

/// Exact overlap epsilon_n between the two half-graph ground spaces of the
/// H-shaped graph, via principal angles. n in {1, 2}; n = 3 only with
/// allow_large_n (hours of runtime); n >= 4 always refused.
double epsilon_exact(int n, bool allow_large_n = false);

/// Residual of the projector inequality EF + FE >= -|EF - E^F|(E + F):
/// smallest eigenvalue of the left-hand side plus the bound, >= -1e-9 when
/// the inequality holds.
double fnw_check(const Matrix& e, const Matrix& f);

}  // namespace gapcert
