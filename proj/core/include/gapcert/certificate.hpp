#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gapcert/bounds.hpp"
#include "gapcert/rng.hpp"

namespace gapcert {

struct GapCertificate {
  int n = 0;
  BoundSuite suite;
  double A_n = 0;
  double eps_bound = 0;
  bool has_eps_exact = false;
  double eps_exact = 0;
  std::string eps_exact_method;
  double gamma_Y = 0;
  std::string gamma_Y_source;  // "computed" or "user-supplied"
  int gamma_Y_kernel_dim = 0;
  double gap_raw = 0;          // before clamping, kept for debugging
  double gap_lower_bound = 0;  // max(0, gap_raw)
  bool valid = false;
  std::string invalid_reason;
  std::uint64_t seed = kDefaultSeed;
  std::map<std::string, std::string> provenance;
};

/// Assemble the full certificate for decoration number n. gamma, when given,
/// is recorded as user-supplied; otherwise the Y-graph gap is computed, which
/// is expensive for n >= 3. with_exact additionally runs the exact overlap
/// oracle (n <= 3 only; n = 3 takes hours).
GapCertificate certify(int n, std::optional<double> gamma = std::nullopt,
                       std::uint64_t seed = kDefaultSeed, bool with_exact = false);

enum class ReportFormat { Json, Text };

std::string render_report(const GapCertificate& cert, ReportFormat format);

/// %.12g formatting used for every scalar in reports; exposed so the CLI
/// prints identically.
std::string format_scalar(double x);

}  // namespace gapcert
