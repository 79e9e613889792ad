#pragma once

namespace gapcert {

/// All scalar constants feeding the overlap bound for one decoration number.
struct BoundSuite {
  int n = 0;
  double a_n = 0;
  double b_n = 0;
  double q_L = 0;
  double q_R = 0;
  double rho_min = 0;
  double norm_EL = 0;
  double norm_ER = 0;
  double b_L = 0;
  double b_R = 0;
  double b_G = 0;
  double b_LR = 0;
  double A_n = 0;
  double eps_bound = 0;
};

/// AKLT closed forms, n >= 1.
BoundSuite bound_suite(int n);

/// Generic entry point for non-AKLT models. D is the bond dimension of the
/// chain segment; norms are the CP-map norms of the boundary operators.
BoundSuite bound_suite_generic(int n, double a_n, int D, double rho_min,
                               double q_L, double q_R, double norm_EL,
                               double norm_ER);

struct EpsilonBound {
  double A_n = 0;
  double eps = 0;
  bool valid = false;
};

/// Overlap bound for the decorated model; valid only when every denominator
/// is positive and the bound lands strictly below 1/3.
EpsilonBound epsilon_bound(int n);

}  // namespace gapcert
