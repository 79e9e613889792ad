#pragma once

#include <cstdint>
#include <vector>

#include "gapcert/rng.hpp"
#include "gapcert/spin.hpp"

namespace gapcert {

/// MPS/PEPS site tensor: d matrices of shape b_left x b_right, indexed by
/// the physical basis.
struct SiteTensor {
  int d = 0;
  int b_left = 0;
  int b_right = 0;
  std::vector<Matrix> mats;
};

/// Linear map M_{d_in} -> M_{d_out}, stored as a (d_out^2) x (d_in^2)
/// matrix acting on row-major vectorized matrices.
struct TransferOperator {
  int d_in = 0;
  int d_out = 0;
  Matrix rep;

  Matrix apply(const Matrix& b) const;
};

Vector vec_rm(const Matrix& m);
Matrix unvec_rm(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Bulk AKLT chain tensor: d=3, bond dimension 2, physical basis |1>,|0>,|-1>.
SiteTensor aklt_site_tensor();

/// Singlet matrix (1/sqrt(2)) (|up><down| - |down><up|).
Matrix singlet_matrix();

/// Spin-3/2 symmetric-subspace MPS matrices, 2x4, physical basis
/// |3/2>,|1/2>,|-1/2>,|-3/2>, virtual pair basis upup, updown, downup, downdown.
std::vector<Matrix> spin32_intertwiner();

struct BoundaryTensors {
  SiteTensor left;   // d=4, 2x4 matrices
  SiteTensor right;  // d=4, 4x2 matrices
};
BoundaryTensors aklt_boundary_tensors();

/// B |-> sum_i mats[i]^dagger B mats[i]; completely positive by construction.
TransferOperator transfer_operator(const SiteTensor& t);

/// Adjoint with respect to the Hilbert-Schmidt pairing.
TransferOperator transpose(const TransferOperator& e);

/// Composition in application order: parts[0] acts first.
TransferOperator compose(const std::vector<TransferOperator>& parts);

TransferOperator power(const TransferOperator& e, int n);

/// (F (x) G) acting on M_{dF * dG} via (A (x) B) -> F(A) (x) G(B).
TransferOperator kron_superop(const TransferOperator& f, const TransferOperator& g);

/// Full left/right boundary transfer operators of the H-shaped graph for
/// decoration number n: the hub map composed with n doubled chain steps.
TransferOperator aklt_transfer_left(int n);
TransferOperator aklt_transfer_right(int n);

struct FixedPointResult {
  Matrix rho;
  bool primitive = false;
  double spectral_gap = 0.0;  // 1 - |second largest eigenvalue|
};
FixedPointResult fixed_point(const TransferOperator& e);

/// || E^n - |1><rho| || in the Hilbert-Schmidt-induced superoperator norm.
double a_of_n(const TransferOperator& e, const Matrix& rho, int n);

struct BoundaryGram {
  Matrix Q_L, Q_R;
  double q_L = 0, q_R = 0;        // smallest eigenvalues
  double norm_EL = 0, norm_ER = 0;  // CP-map norms, largest eigenvalue of Q
};

/// Q_L = E_L(1) (cross-checked against the closed form), Q_R = E_R^t(rho).
BoundaryGram q_matrices(int n);

/// Grouped boundary tensors of the H-shaped graph: the hub plus its two
/// private legs collapsed to one site. Physical index order
/// (i_1, j_1, ..., i_n, j_n, k) with the hub index k fastest.
SiteTensor aklt_gl_tensor(int n);  // d = 4 * 9^n, 2x4 matrices
SiteTensor aklt_gr_tensor(int n);  // d = 4 * 9^n, 4x2 matrices

/// Materialized (unnormalized) MPS vector with n bulk chain sites and
/// optional grouped boundary tensors. Index order: left, chain, right.
/// Shapes of B: 2x2 (no boundaries), 4x2 (left only), 2x4 (right only),
/// 4x4 (both).
Vector gamma_state(int n, const SiteTensor* left, const SiteTensor* right, const Matrix& b);

/// 16x16 Gram matrix of the full H-graph state map over the matrix units
/// of the 4x4 auxiliary space, evaluated by transfer-operator contraction
/// (no ambient-space vector is formed).
Matrix gram_matrix_units_g(int n);

enum class SandwichCase { Chain, LeftChain, ChainRight };

/// Draws random boundary matrices, materializes the state, and returns the
/// worst relative violation of the norm-equivalence sandwich (<= 0 means
/// the inequality holds strictly for every sample).
double norm_sandwich_check(int n, int samples, SandwichCase which,
                           std::uint64_t seed = kDefaultSeed);

}  // namespace gapcert
