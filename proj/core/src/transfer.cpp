#include "gapcert/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace gapcert {

namespace {

const double kSqrt23 = std::sqrt(2.0 / 3.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Matrix spin_dot_spin_half() {
  const SpinOperators s = spin_matrices(1);
  return kron(s.sx, s.sx) + kron(s.sy, s.sy) + kron(s.sz, s.sz);
}

}  // namespace

Vector vec_rm(const Matrix& m) {
  Vector v(m.size());
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(idx++) = m(i, j);
  return v;
}

Matrix unvec_rm(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(idx++);
  return m;
}

Matrix TransferOperator::apply(const Matrix& b) const {
  if (b.rows() != d_in || b.cols() != d_in)
    throw std::invalid_argument("TransferOperator::apply: dimension mismatch");
  return unvec_rm(rep * vec_rm(b), d_out, d_out);
}

SiteTensor aklt_site_tensor() {
  const SpinOperators s = spin_matrices(1);
  SiteTensor t;
  t.d = 3;
  t.b_left = t.b_right = 2;
  t.mats = {-kSqrt23 * s.s_plus, (2.0 * kInvSqrt3) * s.sz, kSqrt23 * s.s_minus};
  return t;
}

Matrix singlet_matrix() {
  Matrix k = Matrix::Zero(2, 2);
  k(0, 1) = 1.0 / std::sqrt(2.0);
  k(1, 0) = -1.0 / std::sqrt(2.0);
  return k;
}

std::vector<Matrix> spin32_intertwiner() {
  // virtual pair basis: upup(0), updown(1), downup(2), downdown(3)
  std::vector<Matrix> p(4, Matrix::Zero(2, 4));
  const double a = kInvSqrt3;            // 1/sqrt(3)
  const double b = kSqrt23 / std::sqrt(2.0);  // sqrt(2/3)/sqrt(2) = 1/sqrt(3)
  p[0](0, 0) = 1.0;                      // |up><upup|
  p[1](1, 0) = a;                        // |down><upup|
  p[1](0, 1) = b;                        // sqrt(2/3)|up><psi+|
  p[1](0, 2) = b;
  p[2](0, 3) = a;                        // |up><downdown|
  p[2](1, 1) = b;                        // sqrt(2/3)|down><psi+|
  p[2](1, 2) = b;
  p[3](1, 3) = 1.0;                      // |down><downdown|
  return p;
}

BoundaryTensors aklt_boundary_tensors() {
  const Matrix k = singlet_matrix();
  const std::vector<Matrix> p = spin32_intertwiner();

  BoundaryTensors bt;
  bt.left.d = 4;
  bt.left.b_left = 2;
  bt.left.b_right = 4;
  bt.right.d = 4;
  bt.right.b_left = 4;
  bt.right.b_right = 2;
  // the chain site matrices carry the bond singlet on their column side, so
  // the left hub supplies the singlets toward its two legs and the right hub
  // supplies the one toward the chain
  const Matrix kk = kron(k, k);
  for (int i = 0; i < 4; ++i) {
    bt.left.mats.push_back(2.0 * p[i] * kk);
    bt.right.mats.push_back(std::sqrt(2.0) * p[i].adjoint() * k);
  }
  return bt;
}

TransferOperator transfer_operator(const SiteTensor& t) {
  TransferOperator e;
  e.d_in = t.b_left;
  e.d_out = t.b_right;
  e.rep = Matrix::Zero(e.d_out * e.d_out, e.d_in * e.d_in);
  for (const Matrix& v : t.mats) e.rep += kron(v.adjoint(), v.transpose());
  return e;
}

TransferOperator transpose(const TransferOperator& e) {
  return {e.d_out, e.d_in, e.rep.adjoint()};
}

TransferOperator compose(const std::vector<TransferOperator>& parts) {
  if (parts.empty()) throw std::invalid_argument("compose: empty list");
  TransferOperator out = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].d_in != out.d_out)
      throw std::invalid_argument("compose: bond dimension mismatch");
    out.rep = parts[i].rep * out.rep;
    out.d_out = parts[i].d_out;
  }
  return out;
}

TransferOperator power(const TransferOperator& e, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  if (e.d_in != e.d_out) throw std::invalid_argument("power: operator not square");
  TransferOperator out{e.d_in, e.d_out,
                       Matrix::Identity(e.d_in * e.d_in, e.d_in * e.d_in)};
  for (int i = 0; i < n; ++i) out.rep = e.rep * out.rep;
  return out;
}

TransferOperator kron_superop(const TransferOperator& f, const TransferOperator& g) {
  TransferOperator out;
  out.d_in = f.d_in * g.d_in;
  out.d_out = f.d_out * g.d_out;
  out.rep = Matrix::Zero(out.d_out * out.d_out, out.d_in * out.d_in);
  const int fo = f.d_out, go = g.d_out, fi = f.d_in, gi = g.d_in;
  for (int a2 = 0; a2 < fo; ++a2)
    for (int e2 = 0; e2 < fo; ++e2)
      for (int b2 = 0; b2 < go; ++b2)
        for (int f2 = 0; f2 < go; ++f2) {
          const Eigen::Index row =
              (a2 * go + b2) * static_cast<Eigen::Index>(out.d_out) + (e2 * go + f2);
          for (int a1 = 0; a1 < fi; ++a1)
            for (int e1 = 0; e1 < fi; ++e1)
              for (int b1 = 0; b1 < gi; ++b1)
                for (int f1 = 0; f1 < gi; ++f1) {
                  const Eigen::Index col =
                      (a1 * gi + b1) * static_cast<Eigen::Index>(out.d_in) + (e1 * gi + f1);
                  out.rep(row, col) =
                      f.rep(a2 * fo + e2, a1 * fi + e1) * g.rep(b2 * go + f2, b1 * gi + f1);
                }
        }
  return out;
}

TransferOperator aklt_transfer_left(int n) {
  if (n < 0) throw std::invalid_argument("aklt_transfer_left: n must be >= 0");
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const TransferOperator en = power(e, n);
  const TransferOperator hub = transfer_operator(aklt_boundary_tensors().left);
  return compose({hub, kron_superop(en, en)});
}

TransferOperator aklt_transfer_right(int n) {
  if (n < 0) throw std::invalid_argument("aklt_transfer_right: n must be >= 0");
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const TransferOperator en = power(e, n);
  const TransferOperator hub = transfer_operator(aklt_boundary_tensors().right);
  return compose({kron_superop(en, en), hub});
}

FixedPointResult fixed_point(const TransferOperator& e) {
  if (e.d_in != e.d_out) throw std::invalid_argument("fixed_point: operator not square");
  const Matrix id = Matrix::Identity(e.d_in, e.d_in);
  if ((e.apply(id) - id).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("fixed_point: transfer operator is not unital");

  Eigen::ComplexEigenSolver<Matrix> es(e.rep.adjoint());
  int best = 0;
  int peripheral = 0;
  double second = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double mag = std::abs(es.eigenvalues()(i));
    if (std::abs(es.eigenvalues()(i) - Complex(1, 0)) <
        std::abs(es.eigenvalues()(best) - Complex(1, 0)))
      best = static_cast<int>(i);
    if (mag > 1.0 - 1e-10) ++peripheral;
  }
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (i == best) continue;
    second = std::max(second, std::abs(es.eigenvalues()(i)));
  }

  Matrix rho = unvec_rm(es.eigenvectors().col(best), e.d_in, e.d_in);
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14)
    throw std::invalid_argument("fixed_point: traceless fixed point candidate");
  rho /= tr;

  Eigen::SelfAdjointEigenSolver<Matrix> rs(rho);
  const double rho_min = rs.eigenvalues().minCoeff();

  FixedPointResult out;
  out.rho = rho;
  out.primitive = (peripheral == 1) && (rho_min > 1e-12);
  out.spectral_gap = 1.0 - std::min(second, 1.0);
  return out;
}

double a_of_n(const TransferOperator& e, const Matrix& rho, int n) {
  if (e.d_in != e.d_out) throw std::invalid_argument("a_of_n: operator not square");
  const Matrix diff =
      power(e, n).rep - vec_rm(Matrix::Identity(e.d_in, e.d_in)) * vec_rm(rho).adjoint();
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues()(0);
}

BoundaryGram q_matrices(int n) {
  if (n < 1) throw std::invalid_argument("q_matrices: n must be >= 1");
  const TransferOperator el = aklt_transfer_left(n);
  const TransferOperator er = aklt_transfer_right(n);

  BoundaryGram out;
  out.Q_L = el.apply(Matrix::Identity(2, 2));
  const Matrix q_closed =
      Matrix::Identity(4, 4) + (4.0 * std::pow(3.0, -(2 * n + 1))) * spin_dot_spin_half();
  if ((out.Q_L - q_closed).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("q_matrices: Q_L disagrees with its closed form");

  out.Q_R = transpose(er).apply(0.5 * Matrix::Identity(2, 2));
  if ((out.Q_R - 0.5 * out.Q_L).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("q_matrices: Q_R != Q_L / 2");

  Eigen::SelfAdjointEigenSolver<Matrix> ls(out.Q_L), rs(out.Q_R);
  out.q_L = ls.eigenvalues().minCoeff();
  out.q_R = rs.eigenvalues().minCoeff();
  out.norm_EL = ls.eigenvalues().maxCoeff();
  out.norm_ER = rs.eigenvalues().maxCoeff() * 2.0;  // ||E_R|| = ||E_L||
  return out;
}

namespace {

// W[t] = V_{i_n} ... V_{i_1} over all 3^n chain configurations, i_1 slowest.
std::vector<Matrix> chain_product_table(int n) {
  const SiteTensor v = aklt_site_tensor();
  std::vector<Matrix> table = {Matrix::Identity(2, 2)};
  for (int m = 0; m < n; ++m) {
    std::vector<Matrix> next(table.size() * 3, Matrix(2, 2));
    for (size_t t = 0; t < table.size(); ++t)
      for (int i = 0; i < 3; ++i) next[t * 3 + i] = v.mats[i] * table[t];
    table.swap(next);
  }
  return table;
}

// products (V_{i_m} (x) V_{j_m}) ... (V_{i_1} (x) V_{j_1}), digits (i,j) paired
std::vector<Matrix> doubled_chain_product_table(int n) {
  const SiteTensor v = aklt_site_tensor();
  std::vector<Matrix> pair(9, Matrix(4, 4));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pair[i * 3 + j] = kron(v.mats[i], v.mats[j]);
  std::vector<Matrix> table = {Matrix::Identity(4, 4)};
  for (int m = 0; m < n; ++m) {
    std::vector<Matrix> next(table.size() * 9, Matrix(4, 4));
    for (size_t t = 0; t < table.size(); ++t)
      for (int p = 0; p < 9; ++p) next[t * 9 + p] = pair[p] * table[t];
    table.swap(next);
  }
  return table;
}

}  // namespace

SiteTensor aklt_gl_tensor(int n) {
  if (n < 1) throw std::invalid_argument("aklt_gl_tensor: n must be >= 1");
  const std::vector<Matrix> w = aklt_boundary_tensors().left.mats;
  const std::vector<Matrix> chain = doubled_chain_product_table(n);
  SiteTensor t;
  t.d = static_cast<int>(chain.size()) * 4;
  t.b_left = 2;
  t.b_right = 4;
  t.mats.reserve(t.d);
  for (const Matrix& c : chain)
    for (int k = 0; k < 4; ++k) t.mats.push_back(w[k] * c);
  return t;
}

SiteTensor aklt_gr_tensor(int n) {
  if (n < 1) throw std::invalid_argument("aklt_gr_tensor: n must be >= 1");
  const std::vector<Matrix> w = aklt_boundary_tensors().right.mats;
  const std::vector<Matrix> chain = doubled_chain_product_table(n);
  SiteTensor t;
  t.d = static_cast<int>(chain.size()) * 4;
  t.b_left = 4;
  t.b_right = 2;
  t.mats.reserve(t.d);
  for (const Matrix& c : chain)
    for (int k = 0; k < 4; ++k) t.mats.push_back(c * w[k]);
  return t;
}

Vector gamma_state(int n, const SiteTensor* left, const SiteTensor* right, const Matrix& b) {
  if (n < 1) throw std::invalid_argument("gamma_state: n must be >= 1");
  const Eigen::Index rows_needed = left ? left->b_right : 2;
  const Eigen::Index cols_needed = right ? right->b_left : 2;
  if (b.rows() != rows_needed || b.cols() != cols_needed)
    throw std::invalid_argument("gamma_state: boundary matrix shape mismatch");

  const std::vector<Matrix> w = chain_product_table(n);
  const Eigen::Index nc = static_cast<Eigen::Index>(w.size());
  const Eigen::Index dl = left ? left->d : 1;
  const Eigen::Index dr = right ? right->d : 1;

  auto trace_with = [&](const Matrix& y, const Matrix& prod) {
    // Tr[y * prod], y and prod both 2x2
    return y(0, 0) * prod(0, 0) + y(0, 1) * prod(1, 0) + y(1, 0) * prod(0, 1) +
           y(1, 1) * prod(1, 1);
  };

  Vector psi(dl * nc * dr);
  for (Eigen::Index l = 0; l < dl; ++l) {
    const Matrix lb = left ? Matrix(left->mats[l] * b) : b;  // 2 x rows_needed
    for (Eigen::Index r = 0; r < dr; ++r) {
      const Matrix y = right ? Matrix(lb * right->mats[r]) : lb;  // 2x2
      for (Eigen::Index t = 0; t < nc; ++t)
        psi((l * nc + t) * dr + r) = trace_with(y, w[t]);
    }
  }
  return psi;
}

Matrix gram_matrix_units_g(int n) {
  if (n < 1) throw std::invalid_argument("gram_matrix_units_g: n must be >= 1");
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const TransferOperator en = power(e, n);
  const TransferOperator el = aklt_transfer_left(n);
  const TransferOperator er = aklt_transfer_right(n);

  // X_ab = E_L(|a><b|) for the D=2 chain bond basis
  Matrix x[2][2];
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(a, bb) = 1.0;
      x[a][bb] = el.apply(unit);
    }

  Matrix gram(16, 16);
  for (int p = 0; p < 16; ++p) {
    Matrix bu = Matrix::Zero(4, 4);
    bu(p / 4, p % 4) = 1.0;
    for (int q = 0; q < 16; ++q) {
      Matrix cu = Matrix::Zero(4, 4);
      cu(q / 4, q % 4) = 1.0;
      Complex val(0, 0);
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) {
          const Matrix inner = en.apply(er.apply(bu.adjoint() * x[a][bb] * cu));
          val += inner(a, bb);
        }
      gram(p, q) = val;
    }
  }
  return gram;
}

double norm_sandwich_check(int n, int samples, SandwichCase which, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("norm_sandwich_check: samples must be >= 1");
  if (n < 2) throw std::invalid_argument("norm_sandwich_check: requires n >= 2");

  const double a = std::pow(3.0, -n);
  const Matrix rho = 0.5 * Matrix::Identity(2, 2);
  const BoundaryGram q = q_matrices(n);

  double b_const = 0.0;
  Eigen::Index rows = 2, cols = 2;
  SiteTensor gl, gr;
  const SiteTensor* lp = nullptr;
  const SiteTensor* rp = nullptr;
  switch (which) {
    case SandwichCase::Chain:
      b_const = 4.0 * a;  // a(n) Tr(rho^{-1})
      break;
    case SandwichCase::LeftChain:
      b_const = a * 4.0 * q.norm_EL / (0.5 * q.q_L);
      gl = aklt_gl_tensor(n);
      lp = &gl;
      rows = 4;
      break;
    case SandwichCase::ChainRight:
      b_const = a * 4.0 * q.norm_ER / q.q_R;
      gr = aklt_gr_tensor(n);
      rp = &gr;
      cols = 4;
      break;
  }
  if (b_const >= 1.0)
    throw std::invalid_argument("norm_sandwich_check: b(n) >= 1, sandwich not applicable");

  Rng rng(seed);
  double worst = -1.0;
  for (int s = 0; s < samples; ++s) {
    const Matrix b = rng.gaussian_matrix(rows, cols);
    double weighted_sq = 0.0;
    switch (which) {
      case SandwichCase::Chain:
        weighted_sq = (rho * b.adjoint() * b).trace().real();
        break;
      case SandwichCase::LeftChain:
        weighted_sq = (rho * b.adjoint() * q.Q_L * b).trace().real();
        break;
      case SandwichCase::ChainRight:
        weighted_sq = (q.Q_R * b.adjoint() * b).trace().real();
        break;
    }
    const double wnorm = std::sqrt(weighted_sq);
    const double gnorm = gamma_state(n, lp, rp, b).norm();
    const double lower = wnorm * std::sqrt(1.0 - b_const);
    const double upper = wnorm * std::sqrt(1.0 + b_const);
    const double viol = std::max(lower - gnorm, gnorm - upper) / std::max(wnorm, 1e-300);
    worst = std::max(worst, viol);
  }
  return worst;
}

}  // namespace gapcert
