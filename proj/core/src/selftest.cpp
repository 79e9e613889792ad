#include "gapcert/selftest.hpp"

#include <cmath>
#include <sstream>

#include "gapcert/bounds.hpp"
#include "gapcert/exact_diag.hpp"
#include "gapcert/lattice.hpp"
#include "gapcert/transfer.hpp"

namespace gapcert {

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, double worst = 0.0) {
    std::ostringstream detail;
    if (worst != 0.0) detail << "worst deviation " << worst;
    results.push_back({name, ok, detail.str()});
  }
};

std::vector<Matrix> spin_half_ops() {
  const SpinOperators s = spin_matrices(1);
  return {s.sx, s.sy, s.sz};
}

Matrix spin_dot_spin() {
  const auto su = spin_half_ops();
  Matrix out = Matrix::Zero(4, 4);
  for (const Matrix& u : su) out += kron(u, u);
  return out;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  Suite s;
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const auto su = spin_half_ops();

  // unitality and fixed point
  {
    const Matrix id = Matrix::Identity(2, 2);
    const double dev_unital = (e.apply(id) - id).cwiseAbs().maxCoeff();
    const FixedPointResult fp = fixed_point(e);
    const double dev_rho = (fp.rho - 0.5 * id).cwiseAbs().maxCoeff();
    s.check("transfer: unital, fixed point maximally mixed, primitive",
            dev_unital < 1e-12 && dev_rho < 1e-12 && fp.primitive,
            std::max(dev_unital, dev_rho));
  }

  // spectrum {1, -1/3 x3}
  {
    Eigen::ComplexEigenSolver<Matrix> es(e.rep);
    std::vector<double> ev;
    for (Eigen::Index i = 0; i < 4; ++i) ev.push_back(es.eigenvalues()(i).real());
    std::sort(ev.begin(), ev.end());
    const double dev = std::max({std::abs(ev[0] + 1.0 / 3), std::abs(ev[1] + 1.0 / 3),
                                 std::abs(ev[2] + 1.0 / 3), std::abs(ev[3] - 1.0),
                                 es.eigenvalues().imag().cwiseAbs().maxCoeff()});
    s.check("transfer: spectrum is {1, -1/3, -1/3, -1/3}", dev < 1e-12, dev);
  }

  // a(n) = 3^-n
  {
    const Matrix rho = 0.5 * Matrix::Identity(2, 2);
    double worst = 0;
    for (int n = 1; n <= 12; ++n)
      worst = std::max(worst, std::abs(a_of_n(e, rho, n) - std::pow(3.0, -n)));
    s.check("transfer: a(n) = 3^-n for n = 1..12", worst < 1e-12, worst);
  }

  // closed form of E^n
  {
    const Matrix rho = 0.5 * Matrix::Identity(2, 2);
    double worst = 0;
    for (int n = 1; n <= 10; ++n) {
      Matrix closed = vec_rm(Matrix::Identity(2, 2)) * vec_rm(rho).adjoint();
      const double coeff = 2.0 * (n % 2 ? -1.0 : 1.0) * std::pow(3.0, -n);
      for (const Matrix& u : su) closed += coeff * vec_rm(u) * vec_rm(u).adjoint();
      worst = std::max(worst, (power(e, n).rep - closed).cwiseAbs().maxCoeff());
    }
    s.check("transfer: E^n closed form for n = 1..10", worst < 1e-12, worst);
  }

  // closed form of E_L, and E_R as its transpose
  {
    const Matrix rho = 0.5 * Matrix::Identity(2, 2);
    const Matrix ss = spin_dot_spin();
    double worst = 0;
    for (int n = 1; n <= 3; ++n) {
      Matrix closed = vec_rm(Matrix::Identity(4, 4)) * vec_rm(rho).adjoint() +
                      4.0 * std::pow(3.0, -(2 * n + 1)) * vec_rm(ss) * vec_rm(rho).adjoint();
      const double coeff = 2.0 * ((n + 1) % 2 ? -1.0 : 1.0) * std::pow(3.0, -(n + 1));
      const Matrix id2 = Matrix::Identity(2, 2);
      for (const Matrix& u : su) {
        const Matrix omega = kron(u, id2) + kron(id2, u);
        closed += coeff * vec_rm(omega) * vec_rm(u).adjoint();
      }
      const TransferOperator el = aklt_transfer_left(n);
      worst = std::max(worst, (el.rep - closed).cwiseAbs().maxCoeff());
      worst = std::max(
          worst, (aklt_transfer_right(n).rep - transpose(el).rep).cwiseAbs().maxCoeff());
    }
    s.check("transfer: E_L closed form and E_R = E_L^t for n = 1..3", worst < 1e-12, worst);
  }

  // orthogonality data of the closed-form vectors
  {
    const Matrix ss = spin_dot_spin();
    const Matrix id2 = Matrix::Identity(2, 2);
    double worst = std::abs(ss.norm() - std::sqrt(3.0) / 2.0);
    for (const Matrix& u : su) {
      const Matrix omega = kron(u, id2) + kron(id2, u);
      worst = std::max(worst, std::abs(omega.norm() - std::sqrt(2.0)));
      worst = std::max(worst, std::abs((ss.adjoint() * omega).trace()));
    }
    s.check("transfer: |S.S| = sqrt(3)/2, |Omega| = sqrt(2), orthogonal", worst < 1e-12,
            worst);
  }

  // boundary tensor identities
  {
    const BoundaryTensors bt = aklt_boundary_tensors();
    Matrix sum = Matrix::Zero(2, 2);
    for (const Matrix& w : bt.left.mats) sum += w * w.adjoint();
    double worst = (sum - 2.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    const Matrix hub = transfer_operator(bt.left).apply(Matrix::Identity(2, 2));
    const Matrix expect = Matrix::Identity(4, 4) + (4.0 / 3.0) * spin_dot_spin();
    worst = std::max(worst, (hub - expect).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix> es(hub);
    worst = std::max(worst, std::abs(es.eigenvalues()(0)));
    for (int i = 1; i < 4; ++i)
      worst = std::max(worst, std::abs(es.eigenvalues()(i) - 4.0 / 3.0));
    s.check("boundary: sum W W^* = 2, hub map of identity has spectrum {0, 4/3 x3}",
            worst < 1e-12, worst);
  }

  // Q matrices
  {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
      const BoundaryGram q = q_matrices(n);  // throws if closed forms disagree
      worst = std::max(worst, std::abs(q.q_L - (1.0 - std::pow(3.0, -2 * n))));
      worst = std::max(worst, std::abs(q.norm_EL - (1.0 + std::pow(3.0, -(2 * n + 1)))));
      worst = std::max(worst, std::abs(q.q_R - 0.5 * q.q_L));
    }
    s.check("boundary: spec(Q_L) closed form and Q_R = Q_L/2 for n = 1..6", worst < 1e-12,
            worst);
  }

  // epsilon bound regimes
  {
    bool ok = !epsilon_bound(1).valid && !epsilon_bound(2).valid;
    double prev = 1.0 / 3.0;
    for (int n = 3; n <= 50; ++n) {
      const EpsilonBound eb = epsilon_bound(n);
      ok = ok && eb.valid && eb.eps < prev;
      prev = eb.eps;
    }
    ok = ok && epsilon_bound(3).eps < 0.2683;
    const double dev = std::abs(1.0 - bound_suite(2).b_L - 0.0962962962962963);
    s.check("bounds: invalid below n = 3, monotone above, printed values reproduced",
            ok && dev < 1e-12, dev);
  }

  // norm sandwiches over random boundary matrices
  {
    double worst = -1;
    for (int n = 2; n <= 3; ++n)
      for (SandwichCase which :
           {SandwichCase::Chain, SandwichCase::LeftChain, SandwichCase::ChainRight})
        worst = std::max(worst, norm_sandwich_check(n, 25, which, seed));
    s.check("states: norm sandwich holds for n = 2, 3", worst <= 1e-9, worst);
  }

  // Gram rank of the full-graph state map
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram_matrix_units_g(2));
    const double smallest = es.eigenvalues().minCoeff();
    s.check("states: Gram matrix of the n = 2 graph map has full rank 16", smallest > 1e-6,
            smallest);
  }

  // projector inequality
  {
    Rng rng(seed);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::Index d = 4 + (trial % 5);
      const Matrix p1 = rng.random_projector(d, 1 + (trial % 3));
      const Matrix p2 = rng.random_projector(d, 1 + ((trial + 1) % 3));
      worst = std::min(worst, fnw_check(p1, p2));
    }
    const Matrix p = Rng(seed).random_projector(6, 2);
    worst = std::min(worst, fnw_check(p, p));
    s.check("projectors: FNW residual >= -1e-9 over 200 random pairs", worst >= -1e-9, worst);
  }

  // small exact-diagonalization oracles
  {
    const Matrix kernel = kernel_basis(hamiltonian(build_y_graph(1)));
    const double gamma = gap_above_kernel(hamiltonian(build_y_graph(1)), 8);
    const EigenResult ground = lowest_eigenvalues(hamiltonian(build_decorated_torus(1, 1, 1)), 1);
    s.check("oracle: Y-graph kernel is 8-dim, gap positive, torus ground energy 0",
            kernel.cols() == 8 && gamma > 1e-4 && std::abs(ground.eigenvalues[0]) < 1e-9,
            ground.eigenvalues[0]);
  }

  return s.results;
}

}  // namespace gapcert
