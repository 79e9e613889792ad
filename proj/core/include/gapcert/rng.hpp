#pragma once

#include <cmath>
#include <cstdint>

#include "gapcert/spin.hpp"

namespace gapcert {

inline constexpr std::uint64_t kDefaultSeed = 20190426;

/// splitmix64 + Box-Muller; hand-rolled so that streams are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() {  // in (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform(), v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(6.283185307179586477 * v);
    have_spare_ = true;
    return r * std::cos(6.283185307179586477 * v);
  }

  Complex gaussian_complex() {
    const double re = gaussian();
    return Complex(re, gaussian());
  }

  Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian_complex();
    return m;
  }

  /// Random rank-r orthogonal projector in dimension d (Haar via QR).
  Matrix random_projector(Eigen::Index d, Eigen::Index r) {
    Matrix q = Eigen::HouseholderQR<Matrix>(gaussian_matrix(d, r)).householderQ() *
               Matrix::Identity(d, r);
    return q * q.adjoint();
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gapcert
