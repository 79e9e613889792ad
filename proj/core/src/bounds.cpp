#include "gapcert/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gapcert {

BoundSuite bound_suite_generic(int n, double a_n, int D, double rho_min,
                               double q_L, double q_R, double norm_EL,
                               double norm_ER) {
  if (n < 1) throw std::invalid_argument("bound_suite: n must be >= 1");
  if (a_n < 0 || rho_min <= 0 || q_L <= 0 || q_R <= 0 || norm_EL <= 0 || norm_ER <= 0 || D < 1)
    throw std::invalid_argument("bound_suite: inputs out of range");

  BoundSuite s;
  s.n = n;
  s.a_n = a_n;
  s.rho_min = rho_min;
  s.q_L = q_L;
  s.q_R = q_R;
  s.norm_EL = norm_EL;
  s.norm_ER = norm_ER;
  const double D2 = static_cast<double>(D) * D;
  // a(n) Tr(rho^{-1}), with the trace estimated by D / rho_min; exact for a
  // maximally mixed fixed point.
  s.b_n = a_n * D / rho_min;
  s.b_L = a_n * D2 * norm_EL / (rho_min * q_L);
  s.b_R = a_n * D2 * norm_ER / q_R;
  s.b_G = a_n * D2 * norm_EL * norm_ER / (q_L * q_R);
  s.b_LR = s.b_L + s.b_R - s.b_L * s.b_R;

  const double one_minus = 1.0 - s.b_LR;
  s.A_n = one_minus > 0 ? s.b_n / std::sqrt(one_minus) : std::numeric_limits<double>::infinity();
  s.eps_bound = s.A_n + s.A_n * s.A_n * (1.0 + s.b_G);
  return s;
}

BoundSuite bound_suite(int n) {
  if (n < 1) throw std::invalid_argument("bound_suite: n must be >= 1");
  const double a = std::pow(3.0, -n);
  const double norm = 1.0 + std::pow(3.0, -(2 * n + 1));
  const double q_l = 1.0 - std::pow(3.0, -2 * n);
  return bound_suite_generic(n, a, 2, 0.5, q_l, 0.5 * q_l, norm, norm);
}

EpsilonBound epsilon_bound(int n) {
  if (n < 1) throw std::invalid_argument("epsilon_bound: n must be >= 1");
  const BoundSuite s = bound_suite(n);

  // A_n in the explicitly rationalized form; must agree with the
  // b_n/sqrt(1-b_LR) route whenever the latter is finite.
  const double pow3n = std::pow(3.0, n);
  const double denom =
      1.0 - 8.0 * (1.0 + std::pow(3.0, -(2 * n + 1))) / (pow3n * (1.0 - std::pow(3.0, -2 * n)));

  EpsilonBound out;
  if (denom <= 0) {
    out.A_n = std::numeric_limits<double>::infinity();
    out.eps = std::numeric_limits<double>::infinity();
    out.valid = false;
    return out;
  }
  out.A_n = 4.0 / (pow3n * denom);
  if (!std::isinf(s.A_n) && std::abs(out.A_n - s.A_n) > 1e-12 * std::abs(out.A_n))
    throw std::runtime_error("epsilon_bound: A_n cross-check failed");
  out.eps = out.A_n + out.A_n * out.A_n * (1.0 + s.b_G);
  out.valid = out.eps < 1.0 / 3.0;
  return out;
}

}  // namespace gapcert
