#include <doctest.h>

#include <cmath>

#include "gapcert/lattice.hpp"
#include "gapcert/transfer.hpp"

using namespace gapcert;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("row-major vectorization convention") {
  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  const Vector v = vec_rm(m);
  CHECK(v(0).real() == 1);
  CHECK(v(1).real() == 2);
  CHECK(v(2).real() == 3);
  CHECK(v(3).real() == 4);
  CHECK(max_abs(unvec_rm(v, 2, 2) - m) < 1e-15);
}

TEST_CASE("chain transfer operator basics") {
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(max_abs(e.apply(id) - id) < 1e-14);

  const FixedPointResult fp = fixed_point(e);
  CHECK(fp.primitive);
  CHECK(max_abs(fp.rho - 0.5 * id) < 1e-12);
  CHECK(fp.spectral_gap == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  for (int n = 1; n <= 12; ++n)
    CHECK(std::abs(a_of_n(e, fp.rho, n) - std::pow(3.0, -n)) < 1e-12);
}

TEST_CASE("fixed_point rejects non-unital maps and flags non-primitive ones") {
  TransferOperator scaled = transfer_operator(aklt_site_tensor());
  scaled.rep *= 2.0;
  CHECK_THROWS_AS(fixed_point(scaled), std::invalid_argument);

  SiteTensor dephase;
  dephase.d = 2;
  dephase.b_left = dephase.b_right = 2;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  dephase.mats = {p0, p1};
  const FixedPointResult fp = fixed_point(transfer_operator(dephase));
  CHECK_FALSE(fp.primitive);
}

TEST_CASE("boundary tensor identities") {
  const Matrix k = singlet_matrix();
  CHECK(max_abs(Matrix(k.adjoint() * k) - 0.5 * Matrix::Identity(2, 2)) < 1e-14);

  const auto p = spin32_intertwiner();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Complex overlap = (p[a] * p[b].adjoint()).trace();
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-14);
    }

  const BoundaryTensors bt = aklt_boundary_tensors();
  // the highest-weight component maps the down-down pair to up: the singlets
  // the left hub carries toward its legs flip both pair spins
  Matrix expect = Matrix::Zero(2, 4);
  expect(0, 3) = 1.0;
  CHECK(max_abs(bt.left.mats[0] - expect) < 1e-14);

  Matrix sum = Matrix::Zero(2, 2);
  for (const Matrix& w : bt.left.mats) sum += w * w.adjoint();
  CHECK(max_abs(sum - 2.0 * Matrix::Identity(2, 2)) < 1e-13);

  // the two hub orientations are adjoints of each other up to the bond
  // singlets each one carries
  const Matrix kk = kron(k, k);
  for (int a = 0; a < 4; ++a)
    CHECK(max_abs(bt.right.mats[a] -
                  Matrix(2.0 * std::sqrt(2.0) * kk * bt.left.mats[a].adjoint() * k)) < 1e-13);
}

TEST_CASE("compose applies parts in list order") {
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const TransferOperator hub = transfer_operator(aklt_boundary_tensors().left);
  const TransferOperator both = compose({e, hub});
  Rng rng(11);
  const Matrix x = rng.gaussian_matrix(2, 2);
  CHECK(max_abs(both.apply(x) - hub.apply(e.apply(x))) < 1e-12);
  CHECK_THROWS_AS(compose({hub, hub}), std::invalid_argument);

  const TransferOperator e3 = power(e, 3);
  CHECK(max_abs(e3.rep - compose({e, e, e}).rep) < 1e-12);
  CHECK_THROWS_AS(power(hub, 2), std::invalid_argument);
}

TEST_CASE("kron_superop acts factorwise") {
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  const TransferOperator hub = transfer_operator(aklt_boundary_tensors().left);
  const TransferOperator prod = kron_superop(e, hub);
  Rng rng(13);
  const Matrix a = rng.gaussian_matrix(2, 2);
  const Matrix b = rng.gaussian_matrix(2, 2);
  CHECK(max_abs(prod.apply(kron(a, b)) - kron(e.apply(a), hub.apply(b))) < 1e-12);
}

TEST_CASE("transpose is the Hilbert-Schmidt adjoint") {
  const TransferOperator el = aklt_transfer_left(2);
  const TransferOperator elt = transpose(el);
  Rng rng(17);
  const Matrix a = rng.gaussian_matrix(4, 4);
  const Matrix b = rng.gaussian_matrix(2, 2);
  const Complex lhs = (elt.apply(a).adjoint() * b).trace();
  const Complex rhs = (a.adjoint() * el.apply(b)).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("boundary Gram matrices reproduce the printed spectra") {
  const BoundaryGram q = q_matrices(2);
  CHECK(q.q_L == doctest::Approx(1.0 - std::pow(3.0, -4)).epsilon(1e-13));
  CHECK(q.norm_EL == doctest::Approx(1.0 + std::pow(3.0, -5)).epsilon(1e-13));
  CHECK(q.q_R == doctest::Approx(0.5 * q.q_L).epsilon(1e-13));
  CHECK(max_abs(q.Q_R - 0.5 * q.Q_L) < 1e-13);

  for (int n = 1; n <= 3; ++n)
    CHECK(max_abs(aklt_transfer_right(n).rep - Matrix(aklt_transfer_left(n).rep.adjoint())) <
          1e-13);
}

TEST_CASE("Q_L approaches the identity monotonically") {
  double prev = 1e9;
  for (int n = 1; n <= 10; ++n) {
    const double dev = max_abs(q_matrices(n).Q_L - Matrix::Identity(4, 4));
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("gamma_state on a bare chain matches hand contraction") {
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 1.0;
  const Vector psi = gamma_state(1, nullptr, nullptr, b);
  REQUIRE(psi.size() == 3);
  // components Tr[B V_i] = (V_i)_{00}
  CHECK(std::abs(psi(0)) < 1e-14);
  CHECK(psi(1).real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
  CHECK(std::abs(psi(2)) < 1e-14);

  CHECK_THROWS_AS(gamma_state(1, nullptr, nullptr, Matrix::Zero(2, 4)),
                  std::invalid_argument);
}

TEST_CASE("decorated H-graph states lie in the Hamiltonian kernel") {
  const int n = 1;
  const SiteTensor gl = aklt_gl_tensor(n);
  const SiteTensor gr = aklt_gr_tensor(n);
  const SparseHermitianOperator h = hamiltonian(build_g_graph(n));

  Rng rng(29);
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix b = rng.gaussian_matrix(4, 4);
    const Vector psi = gamma_state(n, &gl, &gr, b);
    REQUIRE(psi.size() == h.dim());
    const double energy = (psi.adjoint() * (h.mat * psi)).real()(0, 0);
    CHECK(energy < 1e-10 * psi.squaredNorm());
  }

  // one-sided states annihilate the matching half-graph Hamiltonians
  const SparseHermitianOperator hv =
      hamiltonian(induced_subgraph(build_g_graph(n), {Region::GL, Region::CN}));
  const Matrix bl = rng.gaussian_matrix(4, 2);
  const Vector left_psi = gamma_state(n, &gl, nullptr, bl);
  REQUIRE(left_psi.size() == hv.dim());
  CHECK((left_psi.adjoint() * (hv.mat * left_psi)).real()(0, 0) <
        1e-10 * left_psi.squaredNorm());

  const SparseHermitianOperator hw =
      hamiltonian(induced_subgraph(build_g_graph(n), {Region::CN, Region::GR}));
  const Matrix br = rng.gaussian_matrix(2, 4);
  const Vector right_psi = gamma_state(n, nullptr, &gr, br);
  REQUIRE(right_psi.size() == hw.dim());
  CHECK((right_psi.adjoint() * (hw.mat * right_psi)).real()(0, 0) <
        1e-10 * right_psi.squaredNorm());
}

TEST_CASE("contracted Gram matrix matches the materialized state map") {
  const int n = 1;
  const SiteTensor gl = aklt_gl_tensor(n);
  const SiteTensor gr = aklt_gr_tensor(n);

  Matrix direct(16, 16);
  std::vector<Vector> states;
  for (int p = 0; p < 16; ++p) {
    Matrix unit = Matrix::Zero(4, 4);
    unit(p / 4, p % 4) = 1.0;
    states.push_back(gamma_state(n, &gl, &gr, unit));
  }
  for (int p = 0; p < 16; ++p)
    for (int q = 0; q < 16; ++q) direct(p, q) = states[p].dot(states[q]);

  CHECK(max_abs(gram_matrix_units_g(n) - direct) < 1e-10);
}

TEST_CASE("norm sandwich holds for random boundary matrices") {
  for (SandwichCase which :
       {SandwichCase::Chain, SandwichCase::LeftChain, SandwichCase::ChainRight})
    CHECK(norm_sandwich_check(2, 50, which) <= 1e-9);
  CHECK_THROWS_AS(norm_sandwich_check(1, 10, SandwichCase::Chain), std::invalid_argument);
}
