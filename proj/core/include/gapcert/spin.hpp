#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

namespace gapcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Spin-s matrix family for a single site, s = two_s / 2.
/// Basis order is descending magnetic quantum number |s>, |s-1>, ..., |-s>.
struct SpinOperators {
  int two_s = 0;
  int dim = 0;
  Matrix sx, sy, sz;
  Matrix s_plus, s_minus;
};

SpinOperators spin_matrices(int two_s);

/// Orthogonal projector onto the total-spin-J subspace (J = two_J / 2) of
/// C^{two_s_a+1} (x) C^{two_s_b+1}, built as the spectral projector of the
/// two-site Casimir at eigenvalue J(J+1).
Matrix total_spin_projector(int two_s_a, int two_s_b, int two_J);

/// A sparse operator on a tensor product of local sites.
struct SparseHermitianOperator {
  SparseMatrix mat;
  std::vector<int> local_dims;

  Eigen::Index dim() const { return mat.rows(); }
  bool is_hermitian(double tol = 1e-12) const;
};

/// Embed a two-site operator acting on (site_i, site_j), identity elsewhere.
/// Tensor factors are ordered by the local_dims list, with site 0 slowest;
/// the operator's own factor order is (site_i, site_j) as given.
SparseHermitianOperator embed_two_site(const Matrix& op, int site_i, int site_j,
                                       const std::vector<int>& local_dims);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace gapcert
