#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapcert/bounds.hpp"
#include "gapcert/certificate.hpp"
#include "gapcert/exact_diag.hpp"
#include "gapcert/lattice.hpp"
#include "gapcert/selftest.hpp"
#include "gapcert/transfer.hpp"

namespace {

using namespace gapcert;

// "k" or "a..b", at most 64 values
std::vector<int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  std::vector<int> out;
  if (dots == std::string::npos) {
    out.push_back(std::stoi(text));
  } else {
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("--n range is empty");
    if (b - a + 1 > 64) throw std::invalid_argument("--n range exceeds 64 values");
    for (int n = a; n <= b; ++n) out.push_back(n);
  }
  for (int n : out)
    if (n < 1) throw std::invalid_argument("--n values must be >= 1");
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_atomic(out_path, content);
}

int cmd_certify(const std::string& n_spec, std::optional<double> gamma,
                const std::string& format, const std::string& out_path, std::uint64_t seed) {
  const std::vector<int> ns = parse_n_range(n_spec);
  const ReportFormat fmt = format == "json" ? ReportFormat::Json : ReportFormat::Text;

  std::vector<std::future<GapCertificate>> jobs;
  jobs.reserve(ns.size());
  for (int n : ns)
    jobs.push_back(std::async(std::launch::async,
                              [n, gamma, seed] { return certify(n, gamma, seed); }));

  std::string doc;
  bool all_valid = true;
  for (auto& job : jobs) {  // already ordered by n
    const GapCertificate cert = job.get();
    all_valid = all_valid && cert.valid;
    doc += render_report(cert, fmt);
    doc += fmt == ReportFormat::Json ? "\n" : "\n";
  }
  emit(doc, out_path);
  return all_valid ? 0 : 2;
}

int cmd_epsilon(int n, bool exact, bool allow_large_n, std::uint64_t seed) {
  (void)seed;
  if (exact) {
    const double eps = epsilon_exact(n, allow_large_n);
    std::cout << "epsilon_exact(" << n << ") = " << format_scalar(eps) << "\n";
    return 0;
  }
  const EpsilonBound eb = epsilon_bound(n);
  std::cout << "A_n = " << format_scalar(eb.A_n) << "\n";
  std::cout << "epsilon_bound(" << n << ") = " << format_scalar(eb.eps) << "\n";
  std::cout << "valid (epsilon < 1/3): " << (eb.valid ? "true" : "false") << "\n";
  return eb.valid ? 0 : 2;
}

int cmd_gamma_y(int n) {
  const double gamma = gap_above_kernel(hamiltonian(build_y_graph(n)), 8);
  std::cout << "gamma_Y(n=" << n << ") = " << format_scalar(gamma)
            << "  (kernel dimension 8)\n";
  return 0;
}

int cmd_transfer_report(int n) {
  const TransferOperator e = transfer_operator(aklt_site_tensor());
  Eigen::ComplexEigenSolver<Matrix> es(e.rep);
  std::cout << "chain transfer operator spectrum:";
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    std::cout << " " << format_scalar(es.eigenvalues()(i).real());
  std::cout << "\n";

  const FixedPointResult fp = fixed_point(e);
  std::cout << "fixed point primitive: " << (fp.primitive ? "true" : "false")
            << ", spectral gap " << format_scalar(fp.spectral_gap) << "\n";
  std::cout << "a(" << n << ") = " << format_scalar(a_of_n(e, fp.rho, n)) << "\n";

  const BoundaryGram q = q_matrices(n);
  auto print_spec = [](const char* name, const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> s(m);
    std::cout << name << " spectrum:";
    for (Eigen::Index i = 0; i < s.eigenvalues().size(); ++i)
      std::cout << " " << format_scalar(s.eigenvalues()(i));
    std::cout << "\n";
  };
  print_spec("Q_L", q.Q_L);
  print_spec("Q_R", q.Q_R);
  std::cout << "|E_L| = " << format_scalar(q.norm_EL)
            << ", |E_R| = " << format_scalar(q.norm_ER) << "\n";
  return 0;
}

int cmd_fnw_check(int dim, int trials, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("--dim must be >= 2");
  Rng rng(seed);
  double worst = 1e300;
  for (int t = 0; t < trials; ++t) {
    const Eigen::Index r1 = 1 + static_cast<Eigen::Index>(rng.next_u64() % (dim - 1));
    const Eigen::Index r2 = 1 + static_cast<Eigen::Index>(rng.next_u64() % (dim - 1));
    worst = std::min(worst, fnw_check(rng.random_projector(dim, r1),
                                      rng.random_projector(dim, r2)));
  }
  std::cout << "worst residual over " << trials << " trials in dimension " << dim << ": "
            << format_scalar(worst) << "\n";
  if (worst < -1e-9) {
    std::cerr << "error: projector inequality violated\n";
    return 1;
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed) {
  bool all = true;
  for (const CheckResult& r : run_selftest(seed)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

int cmd_graph(const std::string& type, int n, int cells_x, int cells_y,
              const std::string& out_path) {
  DecoratedGraph g;
  if (type == "y")
    g = build_y_graph(n);
  else if (type == "g")
    g = build_g_graph(n);
  else if (type == "torus")
    g = build_decorated_torus(cells_x, cells_y, n);
  else
    throw std::invalid_argument("unknown graph type " + type);
  emit(graph_to_json(g) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap certification for edge-decorated hexagonal AKLT models"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv("GAPCERT_SEED")) seed = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", seed, "RNG seed for property checks (overrides GAPCERT_SEED)");

  std::string n_spec = "3", format = "text", out_path;
  double gamma_value = 0;
  auto* certify_cmd = app.add_subcommand("certify", "assemble a gap certificate");
  certify_cmd->add_option("--n", n_spec, "decoration number, single value or range a..b")
      ->required();
  auto* gamma_opt = certify_cmd->add_option(
      "--gamma", gamma_value, "use this externally computed gamma_Y instead of solving");
  certify_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  certify_cmd->add_option("--out", out_path, "write output atomically to this path");

  int n_val = 3;
  bool exact = false, allow_large_n = false;
  auto* epsilon_cmd = app.add_subcommand("epsilon", "overlap bound or exact overlap");
  epsilon_cmd->add_option("--n", n_val, "decoration number")->required();
  epsilon_cmd->add_flag("--exact", exact, "compute the exact overlap oracle");
  epsilon_cmd->add_flag("--allow-large-n", allow_large_n,
                        "permit the expensive n = 3 exact computation");

  int gy_n = 3;
  auto* gamma_cmd = app.add_subcommand("gamma-y", "Y-graph gap above the 8-dim kernel");
  gamma_cmd->add_option("--n", gy_n, "decoration number")->required();

  int tr_n = 3;
  auto* transfer_cmd = app.add_subcommand("transfer-report", "transfer-operator diagnostics");
  transfer_cmd->add_option("--n", tr_n, "decoration number")->required();

  int fnw_dim = 6, fnw_trials = 1000;
  auto* fnw_cmd = app.add_subcommand("fnw-check", "random projector inequality check");
  fnw_cmd->add_option("--dim", fnw_dim, "ambient dimension")->required();
  fnw_cmd->add_option("--trials", fnw_trials, "number of random pairs");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the full property suite");

  std::string graph_type = "y";
  int g_cells_x = 1, g_cells_y = 1, g_n = 1;
  std::string g_out;
  auto* graph_cmd = app.add_subcommand("graph", "dump a lattice graph as json");
  graph_cmd->add_option("--type", graph_type, "y, g, or torus");
  graph_cmd->add_option("--n", g_n, "decoration number")->required();
  graph_cmd->add_option("--cells-x", g_cells_x, "torus cells in x");
  graph_cmd->add_option("--cells-y", g_cells_y, "torus cells in y");
  graph_cmd->add_option("--out", g_out, "write output atomically to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (certify_cmd->parsed()) {
      std::optional<double> gamma;
      if (gamma_opt->count() > 0) gamma = gamma_value;
      return cmd_certify(n_spec, gamma, format, out_path, seed);
    }
    if (epsilon_cmd->parsed()) return cmd_epsilon(n_val, exact, allow_large_n, seed);
    if (gamma_cmd->parsed()) return cmd_gamma_y(gy_n);
    if (transfer_cmd->parsed()) return cmd_transfer_report(tr_n);
    if (fnw_cmd->parsed()) return cmd_fnw_check(fnw_dim, fnw_trials, seed);
    if (selftest_cmd->parsed()) return cmd_selftest(seed);
    if (graph_cmd->parsed()) return cmd_graph(graph_type, g_n, g_cells_x, g_cells_y, g_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
