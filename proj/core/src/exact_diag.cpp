#include "gapcert/exact_diag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gapcert/rng.hpp"

namespace gapcert {

namespace {

constexpr Eigen::Index kDenseDirectLimit = 1500;
constexpr Eigen::Index kDenseFallbackLimit = 5000;
constexpr double kResidualTol = 1e-9;

// Orthonormal basis of the column span, dropping rank-deficient directions.
Matrix orthonormal_span(const Matrix& s, double rank_tol = 1e-10) {
  if (s.cols() == 0) return Matrix(s.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(s);
  qr.setThreshold(rank_tol);
  const Eigen::Index r = qr.rank();
  return qr.householderQ() * Matrix::Identity(s.rows(), r);
}

EigenResult dense_lowest(const SparseHermitianOperator& h, int k) {
  Matrix dense(h.mat);
  dense = 0.5 * (dense + Matrix(dense.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(dense);
  EigenResult out;
  out.vectors = es.eigenvectors().leftCols(k);
  for (int i = 0; i < k; ++i) {
    out.eigenvalues.push_back(es.eigenvalues()(i));
    out.residual_norms.push_back(
        (h.mat * out.vectors.col(i) - es.eigenvalues()(i) * out.vectors.col(i)).norm());
  }
  return out;
}

// Block preconditioned-free LOBPCG-style iteration with full
// reorthogonalization; plain Lanczos struggles with the 8-fold degenerate
// kernels that dominate this problem family.
EigenResult block_lowest(const SparseHermitianOperator& h, int k) {
  const Eigen::Index dim = h.dim();
  const Eigen::Index b = std::min<Eigen::Index>(k + 6, dim);
  const int maxit = 600;

  Rng rng(kDefaultSeed);
  Matrix x = orthonormal_span(rng.gaussian_matrix(dim, b));
  Matrix hx = h.mat * x;
  Matrix p(dim, 0);
  std::vector<double> best(k, std::numeric_limits<double>::infinity());

  for (int it = 0; it < maxit; ++it) {
    // Rayleigh-Ritz inside span(x)
    Matrix m = x.adjoint() * hx;
    m = 0.5 * (m + Matrix(m.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    x = x * es.eigenvectors();
    hx = hx * es.eigenvectors();
    const Eigen::VectorXd theta = es.eigenvalues();

    Matrix r = hx - x * theta.asDiagonal();
    bool done = true;
    for (int i = 0; i < k; ++i) {
      const double rn = r.col(i).norm();
      best[i] = rn;
      if (rn > kResidualTol) done = false;
    }
    if (done) {
      EigenResult out;
      out.vectors = x.leftCols(k);
      for (int i = 0; i < k; ++i) {
        out.eigenvalues.push_back(theta(i));
        out.residual_norms.push_back(best[i]);
      }
      return out;
    }

    // expand the search space with residuals and the previous step
    Matrix rest(dim, r.cols() + p.cols());
    rest << r, p;
    rest -= x * (x.adjoint() * rest).eval();
    rest -= x * (x.adjoint() * rest).eval();
    Matrix q2 = orthonormal_span(rest);

    Matrix q(dim, x.cols() + q2.cols());
    q << x, q2;
    Matrix hq(dim, q.cols());
    hq << hx, h.mat * q2;

    Matrix a = q.adjoint() * hq;
    a = 0.5 * (a + Matrix(a.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> es2(a);
    const Eigen::Index keep = std::min<Eigen::Index>(b, q.cols());
    Matrix c = es2.eigenvectors().leftCols(keep);

    x = q * c;
    hx = hq * c;
    p = orthonormal_span(q2 * c.bottomRows(q2.cols()));
  }
  throw ConvergenceFailure("block eigensolver did not converge within the iteration budget",
                           best);
}

}  // namespace

EigenResult lowest_eigenvalues(const SparseHermitianOperator& h, int k) {
  const Eigen::Index dim = h.dim();
  if (k < 1 || k > dim)
    throw std::invalid_argument("lowest_eigenvalues: need 1 <= k <= dim");
  if (dim <= kDenseDirectLimit) return dense_lowest(h, k);
  try {
    return block_lowest(h, k);
  } catch (const ConvergenceFailure&) {
    if (dim <= kDenseFallbackLimit) return dense_lowest(h, k);
    throw;
  }
}

double gap_above_kernel(const SparseHermitianOperator& h, int expected_kernel_dim) {
  if (expected_kernel_dim < 1)
    throw std::invalid_argument("gap_above_kernel: expected kernel dim must be >= 1");
  const EigenResult r = lowest_eigenvalues(h, expected_kernel_dim + 1);
  for (int i = 0; i < expected_kernel_dim; ++i)
    if (std::abs(r.eigenvalues[i]) >= 1e-8)
      throw std::runtime_error(
          "gap_above_kernel: kernel dimension mismatch, eigenvalue " + std::to_string(i) +
          " is " + std::to_string(r.eigenvalues[i]));
  const double gap = r.eigenvalues[expected_kernel_dim];
  if (gap <= 1e-4)
    throw std::runtime_error(
        "gap_above_kernel: kernel dimension mismatch, eigenvalue above the expected kernel is " +
        std::to_string(gap));
  return gap;
}

Matrix kernel_basis(const SparseHermitianOperator& h, double tol) {
  const Eigen::Index dim = h.dim();
  if (dim <= kDenseDirectLimit) {
    Matrix dense(h.mat);
    dense = 0.5 * (dense + Matrix(dense.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> es(dense);
    Eigen::Index count = 0;
    while (count < dim && es.eigenvalues()(count) < tol) ++count;
    return es.eigenvectors().leftCols(count);
  }
  for (int k = 16;; k = std::min<Eigen::Index>(2 * k, dim - 1)) {
    const EigenResult r = lowest_eigenvalues(h, k);
    if (r.eigenvalues.back() >= tol) {
      Eigen::Index count = 0;
      while (count < k && r.eigenvalues[count] < tol) ++count;
      return r.vectors.leftCols(count);
    }
    if (k == dim - 1)
      throw std::runtime_error("kernel_basis: kernel spans nearly the whole space");
  }
}

SubspacePair subspace_pair(const Matrix& basis_1, const Matrix& basis_2) {
  if (basis_1.rows() != basis_2.rows())
    throw std::invalid_argument("subspace_pair: ambient dimensions differ");
  auto check_on = [](const Matrix& b, const char* name) {
    const Matrix g = b.adjoint() * b;
    if ((g - Matrix::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument(std::string("subspace_pair: ") + name + " not orthonormal");
  };
  check_on(basis_1, "basis_1");
  check_on(basis_2, "basis_2");

  SubspacePair out;
  out.ambient_dim = basis_1.rows();
  out.basis_1 = basis_1;
  out.basis_2 = basis_2;
  Eigen::BDCSVD<Matrix> svd(basis_1.adjoint() * basis_2);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    if (s > 1.0 + 1e-10)
      throw std::runtime_error("subspace_pair: singular value exceeds 1");
    out.singular_values.push_back(s);
  }
  return out;
}

double epsilon_from_singular_values(const std::vector<double>& svals) {
  for (double s : svals) {
    if (s > 1.0 - 1e-9) continue;  // intersection cluster
    if (s > 1.0 - 1e-6)
      throw std::runtime_error(
          "epsilon: singular value " + std::to_string(s) +
          " is too close to the intersection cluster to classify");
    return s;
  }
  return 0.0;
}

double epsilon_exact(int n, bool allow_large_n) {
  if (n < 1) throw std::invalid_argument("epsilon_exact: n must be >= 1");
  if (n >= 4) throw std::invalid_argument("epsilon_exact: n >= 4 is not supported");
  if (n == 3 && !allow_large_n)
    throw std::invalid_argument("epsilon_exact: n = 3 needs the explicit large-n override");

  const DecoratedGraph g = build_g_graph(n);
  const DecoratedGraph left_half = induced_subgraph(g, {Region::GL, Region::CN});
  const DecoratedGraph right_half = induced_subgraph(g, {Region::CN, Region::GR});

  const Matrix xi = kernel_basis(hamiltonian(left_half));    // on H_GL (x) H_CN
  const Matrix eta = kernel_basis(hamiltonian(right_half));  // on H_CN (x) H_GR
  if (xi.cols() != 8 || eta.cols() != 8)
    throw std::runtime_error("epsilon_exact: unexpected half-graph kernel dimension");

  Eigen::Index h_c = 1;
  for (int i = 0; i < n; ++i) h_c *= 3;
  const Eigen::Index h_l = left_half.hilbert_dim() / h_c;
  const Eigen::Index h_r = right_half.hilbert_dim() / h_c;

  // overlap of xi_a (x) e_r against e_l (x) eta_b, contracting the shared
  // chain index; the full ambient space is never formed
  using RowMajorMap =
      Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  Matrix m(8 * h_r, h_l * 8);
  for (int a = 0; a < 8; ++a) {
    RowMajorMap amat(xi.col(a).data(), h_l, h_c);
    for (int b = 0; b < 8; ++b) {
      RowMajorMap bmat(eta.col(b).data(), h_c, h_r);
      const Matrix block = amat.conjugate() * bmat;  // h_l x h_r
      for (Eigen::Index l = 0; l < h_l; ++l)
        for (Eigen::Index r = 0; r < h_r; ++r) m(a * h_r + r, l * 8 + b) = block(l, r);
    }
  }

  Eigen::BDCSVD<Matrix> svd(m);
  std::vector<double> svals(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
  return epsilon_from_singular_values(svals);
}

double fnw_check(const Matrix& e, const Matrix& f) {
  if (e.rows() != e.cols() || f.rows() != f.cols() || e.rows() != f.rows())
    throw std::invalid_argument("fnw_check: projectors must be square and same size");
  auto check_projector = [](const Matrix& p, const char* name) {
    if ((p - Matrix(p.adjoint())).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument(std::string("fnw_check: ") + name + " not self-adjoint");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument(std::string("fnw_check: ") + name + " not idempotent");
  };
  check_projector(e, "E");
  check_projector(f, "F");

  const Matrix ef = e * f;
  Eigen::BDCSVD<Matrix> svd(ef, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Matrix meet = Matrix::Zero(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1.0 - 1e-9)
      meet += svd.matrixV().col(i) * svd.matrixV().col(i).adjoint();

  Eigen::BDCSVD<Matrix> diff_svd(ef - meet);
  const double bound = diff_svd.singularValues().size() ? diff_svd.singularValues()(0) : 0.0;

  Matrix lhs = ef + f * e + bound * (e + f);
  lhs = 0.5 * (lhs + Matrix(lhs.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(lhs);
  return es.eigenvalues().minCoeff();
}

}  // namespace gapcert
