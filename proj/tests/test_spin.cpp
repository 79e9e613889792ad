#include <doctest.h>

#include "gapcert/rng.hpp"
#include "gapcert/spin.hpp"

using namespace gapcert;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("spin-1/2 matrices are the Pauli matrices over two") {
  const SpinOperators s = spin_matrices(1);
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 0.5, 0.5, 0;
  sy << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
  sz << 0.5, 0, 0, -0.5;
  CHECK(max_abs(s.sx - sx) < 1e-14);
  CHECK(max_abs(s.sy - sy) < 1e-14);
  CHECK(max_abs(s.sz - sz) < 1e-14);
}

TEST_CASE("angular momentum algebra holds for every spin used") {
  for (int two_s : {1, 2, 3}) {
    const SpinOperators s = spin_matrices(two_s);
    const Complex i(0, 1);
    CHECK(max_abs(s.sx * s.sy - s.sy * s.sx - i * s.sz) < 1e-12);
    CHECK(max_abs(s.sy * s.sz - s.sz * s.sy - i * s.sx) < 1e-12);
    const double spin = 0.5 * two_s;
    const Matrix casimir = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
    CHECK(max_abs(casimir - spin * (spin + 1) * Matrix::Identity(s.dim, s.dim)) < 1e-12);
    CHECK(max_abs(s.s_plus - (s.sx + i * s.sy)) < 1e-12);
  }
}

TEST_CASE("spin-1 ladder entries") {
  const SpinOperators s = spin_matrices(2);
  CHECK(s.s_plus(0, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(s.s_plus(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(s.s_plus(0, 2)) < 1e-14);
}

TEST_CASE("total spin projectors of two spin-1/2") {
  const Matrix triplet = total_spin_projector(1, 1, 2);
  const Matrix singlet = total_spin_projector(1, 1, 0);
  CHECK(std::abs(triplet.trace().real() - 3.0) < 1e-12);
  CHECK(std::abs(singlet.trace().real() - 1.0) < 1e-12);
  CHECK(max_abs(triplet + singlet - Matrix::Identity(4, 4)) < 1e-12);
  CHECK(max_abs(triplet * triplet - triplet) < 1e-12);
  CHECK(max_abs(Matrix(triplet.adjoint()) - triplet) < 1e-12);
  // the singlet state (01 - 10)/sqrt(2)
  Vector psi(4);
  psi << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  CHECK((singlet * psi - psi).norm() < 1e-12);
}

TEST_CASE("projector rejects out-of-range or parity-violating total spin") {
  CHECK_THROWS_AS(total_spin_projector(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(total_spin_projector(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(total_spin_projector(3, 2, 6), std::invalid_argument);
}

TEST_CASE("interaction projector ranks") {
  CHECK(std::abs(total_spin_projector(3, 2, 5).trace().real() - 6.0) < 1e-12);
  CHECK(std::abs(total_spin_projector(2, 2, 4).trace().real() - 5.0) < 1e-12);
}

TEST_CASE("embed_two_site matches kron on an adjacent pair") {
  const SpinOperators s = spin_matrices(1);
  const Matrix op = kron(s.sz, s.sx) + kron(s.sx, s.sz);
  const SparseHermitianOperator emb = embed_two_site(op, 0, 1, {2, 2});
  CHECK(max_abs(Matrix(emb.mat) - op) < 1e-14);
  CHECK(emb.is_hermitian());
}

TEST_CASE("embed_two_site handles swapped and non-adjacent sites") {
  Rng rng(7);
  Matrix op = rng.gaussian_matrix(6, 6);
  op = 0.5 * (op + Matrix(op.adjoint()));

  // op factors are (site 2, site 0) with dims (2, 3) in a {3, 2, 2} chain
  const std::vector<int> dims = {3, 2, 2};
  const SparseHermitianOperator emb = embed_two_site(op, 2, 0, dims);
  CHECK(emb.dim() == 12);

  Matrix dense = Matrix::Zero(12, 12);
  auto flat = [&](int a, int b, int c) { return (a * 2 + b) * 2 + c; };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int ap = 0; ap < 3; ++ap)
          for (int cp = 0; cp < 2; ++cp)
            dense(flat(a, b, c), flat(ap, b, cp)) = op(c * 3 + a, cp * 3 + ap);
  CHECK(max_abs(Matrix(emb.mat) - dense) < 1e-14);
}

TEST_CASE("embed_two_site validates arguments") {
  const Matrix op = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(embed_two_site(op, 0, 0, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed_two_site(op, 0, 2, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed_two_site(op, 0, 1, {2, 3}), std::invalid_argument);
}
