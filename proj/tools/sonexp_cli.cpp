// sonexp: closed-form exponentials on so(2)..so(9) and g2, JSON in/out.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sonexp/closed_expm.hpp"
#include "sonexp/conjugacy.hpp"
#include "sonexp/g2.hpp"
#include "sonexp/invariants.hpp"
#include "sonexp/oracles.hpp"
#include "sonexp/skew_basis.hpp"
#include "sonexp/spectral_roots.hpp"

using json = nlohmann::json;
using namespace sonexp;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

// Thrown for malformed input that CLI11 cannot catch itself (bad JSON, bad
// vector length); mapped to the usage exit code.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double degeneracy_threshold() {
  if (const char* env = std::getenv("SON_EXPM_DEG_THRESHOLD")) {
    char* end = nullptr;
    double d = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(d > 0.0))
      throw usage_error("SON_EXPM_DEG_THRESHOLD must be a positive number");
    return d;
  }
  return kDegeneracyThreshold;
}

json read_json_input(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("malformed JSON: ") + e.what());
  }
}

Eigen::VectorXd parse_comma_list(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      vals.push_back(std::stod(tok, &pos));
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw usage_error("cannot parse number '" + tok + "' in --v");
    }
  }
  return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<long>(vals.size()));
}

// Resolves an AlgebraVector from --input JSON or the --n/--v pair.
AlgebraVector read_algebra_vector(const std::string& input, int n, const std::string& vlist) {
  int dim = n;
  Eigen::VectorXd v;
  if (!input.empty()) {
    json j = read_json_input(input);
    if (!j.is_object() || !j.contains("n") || !j.contains("v"))
      throw usage_error("expected JSON object {\"n\": ..., \"v\": [...]}");
    dim = j["n"].get<int>();
    std::vector<double> vals = j["v"].get<std::vector<double>>();
    v = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<long>(vals.size()));
  } else {
    if (vlist.empty()) throw usage_error("provide --input or both --n and --v");
    v = parse_comma_list(vlist);
  }
  if (dim < kMinDim || dim > kMaxDim)
    throw usage_error("n must be in 2..9, got " + std::to_string(dim));
  if (v.size() != algebra_dim(dim))
    throw usage_error("so(" + std::to_string(dim) + ") needs " +
                      std::to_string(algebra_dim(dim)) + " components, got " +
                      std::to_string(v.size()));
  try {
    return AlgebraVector(dim, std::move(v));
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (long i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const json& rows = (j.is_object() && j.contains("R")) ? j["R"] : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw usage_error("expected a matrix as nested arrays (or {\"R\": [[...]]})");
  const long r = static_cast<long>(rows.size());
  const long c = static_cast<long>(rows[0].size());
  Eigen::MatrixXd M(r, c);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[i].size()) != c) throw usage_error("ragged matrix rows");
    for (long k = 0; k < c; ++k) M(i, k) = rows[i][k].get<double>();
  }
  return M;
}

json vector_to_json(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

double ortho_residual(const Eigen::MatrixXd& R) {
  const long n = R.rows();
  return (R.transpose() * R - Eigen::MatrixXd::Identity(n, n)).norm();
}

// ---- subcommand bodies ----

int cmd_exp(const AlgebraVector& av, const std::string& method) {
  const double delta = degeneracy_threshold();
  ExpmResult res;
  std::string used;
  if (method == "taylor") {
    res = expm_with_method(av, ExpmMethod::Taylor, delta);
    used = "taylor";
  } else if (method == "companion") {
    res = expm_with_method(av, ExpmMethod::Companion, delta);
    used = "companion";
  } else if (method == "closed") {
    res = expm_so_detailed(av, delta);
    used = res.used_fallback ? "fallback" : "closed";
  } else {
    throw usage_error("unknown method '" + method + "' (closed|taylor|companion)");
  }
  json out = {{"n", av.n},
              {"R", matrix_to_json(res.R)},
              {"method", used},
              {"degenerate", res.degenerate},
              {"ortho_residual", ortho_residual(res.R)}};
  if (res.coefficients.size() > 0) out["coefficients"] = vector_to_json(res.coefficients);
  emit(out);
  return 0;
}

int cmd_invariants(const AlgebraVector& av, double tolerance) {
  json out = {{"n", av.n}};
  if (norm(av) < 1e-14) {
    out["V"] = 0.0;
    out["in_region"] = true;
    emit(out);
    return 0;
  }
  InvariantSet inv = compute_invariants(av);
  out["V"] = inv.V;
  auto put = [&out](const char* key, double x) {
    if (std::isfinite(x)) out[key] = x;
  };
  put("xi", inv.xi);
  put("zeta", inv.zeta);
  put("eta", inv.eta);
  put("chi", inv.chi);
  put("eta7", inv.eta7);
  put("eta9", inv.eta9);
  out["in_region"] = region_contains(inv, tolerance);
  emit(out);
  return 0;
}

int cmd_roots(const AlgebraVector& av) {
  RootSet rs = solve_roots(compute_invariants(av), degeneracy_threshold());
  emit({{"n", rs.n},
        {"roots", rs.roots},
        {"psi", rs.psi},
        {"degenerate", rs.degenerate},
        {"min_gap", rs.min_gap},
        {"min_root", rs.min_root}});
  return 0;
}

int cmd_angles(const AlgebraVector& av, bool fold) {
  TorusAngles ta = torus_angles(av);
  std::vector<double> phi = ta.phi;
  if (fold)
    for (double& p : phi) p = std::fmod(std::fmod(p, 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI);
  Eigen::MatrixXd R = expm_so(av, degeneracy_threshold());
  emit({{"n", ta.n},
        {"V", ta.V},
        {"phi", phi},
        {"trace_closed", trace_closed_form(av)},
        {"trace_direct", R.trace()}});
  return 0;
}

int cmd_sample(int n, std::uint64_t count, std::uint64_t seed, const std::string& mode,
               double V) {
  if (n < kMinDim || n > kMaxDim) throw usage_error("n must be in 2..9");
  if (mode != "gaussian" && mode != "sphere")
    throw usage_error("mode must be gaussian or sphere");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dim = algebra_dim(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    Eigen::VectorXd v(dim);
    for (int k = 0; k < dim; ++k) v(k) = gauss(rng);
    if (mode == "sphere") {
      double nv = v.norm();
      if (nv > 0.0) v *= V / nv;
    }
    std::cout << json{{"n", n}, {"v", vector_to_json(v)}}.dump() << "\n";
  }
  return 0;
}

int cmd_region_area(int n, std::uint64_t samples, std::uint64_t seed) {
  AreaEstimate est = region_area_mc(n, samples, seed);
  emit({{"n", est.n},
        {"estimate", est.estimate},
        {"stderr", est.stderr_},
        {"samples", est.samples},
        {"seed", est.seed}});
  return 0;
}

int cmd_bench(std::vector<int> dims, int reps, std::uint64_t seed) {
  if (reps < 100) throw usage_error("repetitions must be at least 100");
  if (dims.empty()) dims = {4, 5, 6, 7, 8, 9};
  const double delta = degeneracy_threshold();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  json report = json::array();
  for (int n : dims) {
    if (n < kMinDim || n > kMaxDim) throw usage_error("n must be in 2..9");
    const int dim = algebra_dim(n);
    std::vector<AlgebraVector> inputs;
    inputs.reserve(reps);
    for (int i = 0; i < reps; ++i) {
      Eigen::VectorXd v(dim);
      for (int k = 0; k < dim; ++k) v(k) = gauss(rng);
      inputs.emplace_back(n, std::move(v));
    }

    json methods;
    double sentinel = 0.0;
    std::vector<Eigen::MatrixXd> first(3);
    const std::pair<const char*, ExpmMethod> table[3] = {
        {"closed", ExpmMethod::Closed},
        {"companion", ExpmMethod::Companion},
        {"taylor", ExpmMethod::Taylor}};
    for (int m = 0; m < 3; ++m) {
      std::vector<double> times;
      times.reserve(reps);
      std::vector<Eigen::MatrixXd> results;
      results.reserve(reps);
      for (const AlgebraVector& av : inputs) {
        auto t0 = std::chrono::steady_clock::now();
        Eigen::MatrixXd R = expm_with_method(av, table[m].second, delta).R;
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
        results.push_back(std::move(R));
      }
      if (m == 0) first = results;
      for (int i = 0; i < reps; ++i)
        sentinel = std::max(sentinel, (results[i] - first[i]).norm());
      std::sort(times.begin(), times.end());
      methods[table[m].first] = {
          {"median_us", times[times.size() / 2]},
          {"p95_us", times[static_cast<std::size_t>(0.95 * (times.size() - 1))]}};
    }
    report.push_back({{"n", n},
                      {"repetitions", reps},
                      {"methods", methods},
                      {"max_pairwise_deviation", sentinel}});
  }
  emit({{"seed", seed}, {"report", report}});
  return 0;
}

// ---- g2 subcommands ----

G2Vector read_g2_vector(const std::string& input, const std::string& vlist) {
  Eigen::VectorXd w;
  if (!input.empty()) {
    json j = read_json_input(input);
    const json& arr = (j.is_object() && j.contains("w")) ? j["w"] : j;
    if (!arr.is_array()) throw usage_error("expected 14 numbers (or {\"w\": [...]})");
    std::vector<double> vals = arr.get<std::vector<double>>();
    w = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<long>(vals.size()));
  } else {
    if (vlist.empty()) throw usage_error("provide --input or --v");
    w = parse_comma_list(vlist);
  }
  if (w.size() != 14)
    throw usage_error("g2 vector needs 14 components, got " + std::to_string(w.size()));
  try {
    return G2Vector(std::move(w));
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }
}

int cmd_g2_exp(const G2Vector& w) {
  Eigen::MatrixXd R = expm_g2(w);
  emit({{"n", 7},
        {"R", matrix_to_json(R)},
        {"ortho_residual", ortho_residual(R)},
        {"automorphism_residual", check_automorphism(R)}});
  return 0;
}

int cmd_g2_embed(const G2Vector& w) {
  AlgebraVector av = embed_g2(w);
  emit({{"n", av.n},
        {"v", vector_to_json(av.v)},
        {"algebra_residual", check_algebra_constraint(av)}});
  return 0;
}

int cmd_g2_check(const std::string& input) {
  if (input.empty()) throw usage_error("g2 check needs --input (matrix JSON, '-' for stdin)");
  Eigen::MatrixXd S = matrix_from_json(read_json_input(input));
  if (S.rows() != 7 || S.cols() != 7) throw usage_error("g2 check expects a 7x7 matrix");
  emit({{"automorphism_residual", check_automorphism(S)},
        {"ortho_residual", ortho_residual(S)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form exponentials on so(2)..so(9) and g2"};
  app.require_subcommand(1);

  // shared input options, bound per subcommand
  std::string input, vlist, method = "closed", mode = "gaussian";
  int n = 0, reps = 1000;
  double tolerance = 1e-10, sphereV = M_PI;
  std::uint64_t count = 1, seed = 0, samples = 1000000;
  bool fold = false;
  std::vector<int> dims;

  auto add_vector_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "AlgebraVector JSON file ('-' for stdin)");
    cmd->add_option("--n", n, "matrix dimension (2..9)");
    cmd->add_option("--v", vlist, "comma-separated coefficient list");
  };

  CLI::App* c_exp = app.add_subcommand("exp", "matrix exponential exp(J.v)");
  add_vector_opts(c_exp);
  c_exp->add_option("--method", method, "closed|taylor|companion")->capture_default_str();

  CLI::App* c_inv = app.add_subcommand("invariants", "scalar invariants of J.v/V");
  add_vector_opts(c_inv);
  c_inv->add_option("--tolerance", tolerance, "region check tolerance")->capture_default_str();

  CLI::App* c_roots = app.add_subcommand("roots", "reduced-polynomial roots y_j");
  add_vector_opts(c_roots);

  CLI::App* c_ang = app.add_subcommand("angles", "maximal-torus rotation angles");
  add_vector_opts(c_ang);
  c_ang->add_flag("--fold-angles", fold, "report angles mod 2*pi");

  CLI::App* c_sample = app.add_subcommand("sample", "random algebra vectors (JSON lines)");
  c_sample->add_option("--n", n, "matrix dimension (2..9)")->required();
  c_sample->add_option("--count", count, "number of samples")->capture_default_str();
  c_sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
  c_sample->add_option("--mode", mode, "gaussian|sphere")->capture_default_str();
  c_sample->add_option("--V", sphereV, "norm for sphere mode")->capture_default_str();

  CLI::App* c_region = app.add_subcommand("region", "allowed invariant region tools");
  CLI::App* c_area = c_region->add_subcommand("area", "Monte Carlo area estimate");
  c_area->add_option("--n", n, "6 or 7")->required();
  c_area->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();
  c_area->add_option("--seed", seed, "RNG seed")->capture_default_str();
  c_region->require_subcommand(1);

  CLI::App* c_bench = app.add_subcommand("bench", "timing report closed vs oracles");
  c_bench->add_option("--n", dims, "dimensions to benchmark (default 4..9)");
  c_bench->add_option("--count", reps, "repetitions per method (>= 100)")
      ->capture_default_str();
  c_bench->add_option("--seed", seed, "RNG seed")->capture_default_str();

  CLI::App* c_g2 = app.add_subcommand("g2", "exceptional group G2 in SO(7)");
  CLI::App* c_g2_exp = c_g2->add_subcommand("exp", "exp of an embedded g2 element");
  CLI::App* c_g2_embed = c_g2->add_subcommand("embed", "14-vector -> so(7) 21-vector");
  CLI::App* c_g2_check = c_g2->add_subcommand("check", "automorphism residual of a matrix");
  for (CLI::App* cmd : {c_g2_exp, c_g2_embed}) {
    cmd->add_option("--input", input, "g2 vector JSON file ('-' for stdin)");
    cmd->add_option("--v", vlist, "comma-separated 14 components");
  }
  c_g2_check->add_option("--input", input, "matrix JSON file ('-' for stdin)");
  c_g2->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_exp) return cmd_exp(read_algebra_vector(input, n, vlist), method);
    if (*c_inv) return cmd_invariants(read_algebra_vector(input, n, vlist), tolerance);
    if (*c_roots) return cmd_roots(read_algebra_vector(input, n, vlist));
    if (*c_ang) return cmd_angles(read_algebra_vector(input, n, vlist), fold);
    if (*c_sample) return cmd_sample(n, count, seed, mode, sphereV);
    if (*c_area) return cmd_region_area(n, samples, seed);
    if (*c_bench) return cmd_bench(dims, reps, seed);
    if (*c_g2_exp) return cmd_g2_exp(read_g2_vector(input, vlist));
    if (*c_g2_embed) return cmd_g2_embed(read_g2_vector(input, vlist));
    if (*c_g2_check) return cmd_g2_check(input);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const invariant_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
