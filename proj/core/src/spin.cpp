#include "gapcert/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace gapcert {

SpinOperators spin_matrices(int two_s) {
  if (two_s < 1) throw std::invalid_argument("spin_matrices: two_s must be >= 1");
  const int dim = two_s + 1;
  const double s = 0.5 * two_s;

  SpinOperators ops;
  ops.two_s = two_s;
  ops.dim = dim;
  ops.sz = Matrix::Zero(dim, dim);
  ops.s_plus = Matrix::Zero(dim, dim);

  // row i corresponds to m = s - i
  for (int i = 0; i < dim; ++i) ops.sz(i, i) = s - i;
  // <m+1| S+ |m> = sqrt(s(s+1) - m(m+1)); |m> is column i with m = s - i
  for (int i = 1; i < dim; ++i) {
    const double m = s - i;
    ops.s_plus(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  ops.s_minus = ops.s_plus.adjoint();
  ops.sx = 0.5 * (ops.s_plus + ops.s_minus);
  ops.sy = Complex(0, -0.5) * (ops.s_plus - ops.s_minus);
  return ops;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix total_spin_projector(int two_s_a, int two_s_b, int two_J) {
  if (two_s_a < 1 || two_s_b < 1)
    throw std::invalid_argument("total_spin_projector: spins must be positive");
  if (two_J < std::abs(two_s_a - two_s_b) || two_J > two_s_a + two_s_b ||
      ((two_J ^ (two_s_a + two_s_b)) & 1))
    throw std::invalid_argument("total_spin_projector: two_J outside the Clebsch-Gordan range");

  const SpinOperators sa = spin_matrices(two_s_a);
  const SpinOperators sb = spin_matrices(two_s_b);
  const Matrix ia = Matrix::Identity(sa.dim, sa.dim);
  const Matrix ib = Matrix::Identity(sb.dim, sb.dim);

  const Matrix tx = kron(sa.sx, ib) + kron(ia, sb.sx);
  const Matrix ty = kron(sa.sy, ib) + kron(ia, sb.sy);
  const Matrix tz = kron(sa.sz, ib) + kron(ia, sb.sz);
  const Matrix casimir = tx * tx + ty * ty + tz * tz;

  Eigen::SelfAdjointEigenSolver<Matrix> es(casimir);
  const double J = 0.5 * two_J;
  const double target = J * (J + 1.0);

  const Eigen::Index n = casimir.rows();
  Matrix proj = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(es.eigenvalues()(i) - target) < 1e-9) {
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
  }
  return proj;
}

bool SparseHermitianOperator::is_hermitian(double tol) const {
  SparseMatrix diff = SparseMatrix(mat.adjoint()) - mat;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it)
      if (std::abs(it.value()) > tol) return false;
  return true;
}

SparseHermitianOperator embed_two_site(const Matrix& op, int site_i, int site_j,
                                       const std::vector<int>& local_dims) {
  const int nsites = static_cast<int>(local_dims.size());
  if (site_i == site_j || site_i < 0 || site_j < 0 || site_i >= nsites || site_j >= nsites)
    throw std::invalid_argument("embed_two_site: invalid site indices");
  const Eigen::Index di = local_dims[site_i];
  const Eigen::Index dj = local_dims[site_j];
  if (op.rows() != di * dj || op.cols() != di * dj)
    throw std::invalid_argument("embed_two_site: operator dimension mismatch");

  // strides for row-major site ordering (site 0 slowest)
  std::vector<Eigen::Index> stride(nsites, 1);
  for (int k = nsites - 2; k >= 0; --k) stride[k] = stride[k + 1] * local_dims[k + 1];
  Eigen::Index dim = stride[0] * local_dims[0];

  // enumerate base offsets of all environment configurations
  std::vector<int> env_sites;
  for (int k = 0; k < nsites; ++k)
    if (k != site_i && k != site_j) env_sites.push_back(k);
  Eigen::Index env_count = 1;
  for (int k : env_sites) env_count *= local_dims[k];

  std::vector<Eigen::Index> offsets(env_count);
  std::vector<int> digits(env_sites.size(), 0);
  for (Eigen::Index e = 0; e < env_count; ++e) {
    Eigen::Index off = 0;
    for (size_t q = 0; q < env_sites.size(); ++q) off += digits[q] * stride[env_sites[q]];
    offsets[e] = off;
    for (int q = static_cast<int>(env_sites.size()) - 1; q >= 0; --q) {
      if (++digits[q] < local_dims[env_sites[q]]) break;
      digits[q] = 0;
    }
  }

  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Eigen::Index r = 0; r < op.rows(); ++r) {
    const Eigen::Index a = r / dj, b = r % dj;
    for (Eigen::Index c = 0; c < op.cols(); ++c) {
      const Complex v = op(r, c);
      if (std::abs(v) < 1e-14) continue;
      const Eigen::Index ap = c / dj, bp = c % dj;
      const Eigen::Index row_off = a * stride[site_i] + b * stride[site_j];
      const Eigen::Index col_off = ap * stride[site_i] + bp * stride[site_j];
      for (Eigen::Index off : offsets)
        triplets.emplace_back(off + row_off, off + col_off, v);
    }
  }

  SparseHermitianOperator out;
  out.local_dims = local_dims;
  out.mat = SparseMatrix(dim, dim);
  out.mat.setFromTriplets(triplets.begin(), triplets.end());
  out.mat.makeCompressed();
  return out;
}

}  // namespace gapcert
