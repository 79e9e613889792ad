#include "gapcert/certificate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Core>

#include "gapcert/exact_diag.hpp"
#include "gapcert/lattice.hpp"

namespace gapcert {

std::string format_scalar(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

GapCertificate certify(int n, std::optional<double> gamma, std::uint64_t seed,
                       bool with_exact) {
  if (n < 1) throw std::invalid_argument("certify: n must be >= 1");

  GapCertificate c;
  c.n = n;
  c.seed = seed;
  c.suite = bound_suite(n);
  const EpsilonBound eb = epsilon_bound(n);
  c.A_n = eb.A_n;
  c.eps_bound = eb.eps;

  if (gamma) {
    c.gamma_Y = *gamma;
    c.gamma_Y_source = "user-supplied";
    c.gamma_Y_kernel_dim = 0;
  } else {
    c.gamma_Y = gap_above_kernel(hamiltonian(build_y_graph(n)), 8);
    c.gamma_Y_source = "computed";
    c.gamma_Y_kernel_dim = 8;
  }

  if (with_exact) {
    c.eps_exact = epsilon_exact(n, /*allow_large_n=*/n == 3);
    c.has_eps_exact = true;
    c.eps_exact_method = "principal-angle svd of the half-graph kernel overlap";
  }

  c.gap_raw = 0.5 * c.gamma_Y * (1.0 - 3.0 * c.eps_bound);
  c.gap_lower_bound = std::max(0.0, c.gap_raw);
  c.valid = eb.valid && c.gamma_Y > 0;
  if (!eb.valid) {
    c.invalid_reason =
        "overlap bound formula requires n >= 3; the evaluated bound does not land below 1/3";
  } else if (c.gamma_Y <= 0) {
    c.invalid_reason = "gamma_Y is not positive";
  }

  c.provenance = {
      {"a_n", "3^-n, largest singular value of E^n minus the fixed-point projector"},
      {"b_n", "a(n) * Tr(rho^-1) = 4 * 3^-n"},
      {"b_L", "a(n) * D^2 * |E_L| / (rho_min * q_L)"},
      {"b_R", "a(n) * D^2 * |E_R| / q_R"},
      {"b_G", "a(n) * D^2 * |E_L| * |E_R| / (q_L * q_R)"},
      {"b_LR", "b_L + b_R - b_L * b_R"},
      {"A_n", "4 / (3^n (1 - 8(1 + 3^-(2n+1)) / (3^n (1 - 3^-2n)))) = b_n / sqrt(1 - b_LR)"},
      {"eps_bound", "A_n + A_n^2 (1 + b_G)"},
      {"gamma_Y", c.gamma_Y_source == "computed"
                      ? "lowest eigenvalue of the Y-graph Hamiltonian above its 8-dim kernel"
                      : "user-supplied"},
      {"gap_lower_bound", "max(0, gamma_Y (1 - 3 eps_bound) / 2)"},
  };
  if (c.has_eps_exact) c.provenance["eps_exact"] = c.eps_exact_method;
  return c;
}

namespace {

void json_kv(std::ostringstream& os, const char* key, const std::string& val, bool quote,
             bool first = false) {
  if (!first) os << ",";
  os << "\"" << key << "\":";
  if (quote)
    os << "\"" << val << "\"";
  else
    os << val;
}

std::string render_json(const GapCertificate& c) {
  std::ostringstream os;
  os << "{";
  json_kv(os, "schema", "gapcert/1", true, true);
  json_kv(os, "n", std::to_string(c.n), false);
  json_kv(os, "a_n", format_scalar(c.suite.a_n), false);
  json_kv(os, "b_n", format_scalar(c.suite.b_n), false);
  json_kv(os, "b_L", format_scalar(c.suite.b_L), false);
  json_kv(os, "b_R", format_scalar(c.suite.b_R), false);
  json_kv(os, "b_G", format_scalar(c.suite.b_G), false);
  json_kv(os, "b_LR", format_scalar(c.suite.b_LR), false);
  json_kv(os, "A_n", format_scalar(c.A_n), false);
  json_kv(os, "eps_bound", format_scalar(c.eps_bound), false);
  if (c.has_eps_exact) {
    json_kv(os, "eps_exact", format_scalar(c.eps_exact), false);
    json_kv(os, "eps_exact_method", c.eps_exact_method, true);
  }
  json_kv(os, "gamma_Y", format_scalar(c.gamma_Y), false);
  json_kv(os, "gamma_Y_source", c.gamma_Y_source, true);
  json_kv(os, "gamma_Y_kernel_dim", std::to_string(c.gamma_Y_kernel_dim), false);
  json_kv(os, "gap_lower_bound", format_scalar(c.gap_lower_bound), false);
  json_kv(os, "valid", c.valid ? "true" : "false", false);
  if (!c.valid) json_kv(os, "invalid_reason", c.invalid_reason, true);
  json_kv(os, "seed", std::to_string(c.seed), false);
  os << ",\"versions\":{\"gapcert\":\"1.0.0\",\"eigen\":\""
     << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "." << EIGEN_MINOR_VERSION
     << "\"}";
  os << "}";
  return os.str();
}

std::string render_text(const GapCertificate& c) {
  std::ostringstream os;
  os << "gap certificate, decoration number n = " << c.n << "\n";
  os << "  chain decay        a(n)   = " << format_scalar(c.suite.a_n) << "\n";
  os << "  chain constant     b(n)   = " << format_scalar(c.suite.b_n) << "\n";
  os << "  boundary constants b_L    = " << format_scalar(c.suite.b_L)
     << ", b_R = " << format_scalar(c.suite.b_R) << "\n";
  os << "                     b_G    = " << format_scalar(c.suite.b_G)
     << ", b_LR = " << format_scalar(c.suite.b_LR) << "\n";
  os << "  overlap prefactor  A_n    = " << format_scalar(c.A_n) << "\n";
  os << "  overlap bound      epsilon <= " << format_scalar(c.eps_bound)
     << "  (epsilon < 1/3: " << (c.eps_bound < 1.0 / 3.0 ? "yes" : "NO") << ")\n";
  if (c.has_eps_exact)
    os << "  exact overlap      epsilon = " << format_scalar(c.eps_exact) << "  ["
       << c.eps_exact_method << "]\n";
  os << "  subsystem gap      gamma_Y = " << format_scalar(c.gamma_Y) << "  ["
     << c.gamma_Y_source;
  if (c.gamma_Y_kernel_dim > 0) os << ", kernel dimension " << c.gamma_Y_kernel_dim;
  os << "]\n";
  os << "  gap lower bound    gamma_Y * (1 - 3 epsilon) / 2 = " << format_scalar(c.gap_raw);
  if (c.gap_raw < 0) os << "  (clamped to 0)";
  os << "\n";
  os << "  valid: " << (c.valid ? "true" : "false") << "\n";
  if (!c.valid) os << "  invalid reason: " << c.invalid_reason << "\n";
  if (c.gamma_Y_source == "computed")
    os << "  note: rigorous modulo gamma_Y numerics\n";
  return os.str();
}

}  // namespace

std::string render_report(const GapCertificate& cert, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(cert) : render_text(cert);
}

}  // namespace gapcert
