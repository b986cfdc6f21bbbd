// Batch front end: every solver as a subcommand with JSON input on stdin or
// --in, a deterministic JSON report on stdout or --out, and exit status
//   0  computation succeeded,
//   2  well-posed negative answer (interpolation infeasible),
//   1  schema or runtime error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "hardyr/errors.hpp"
#include "hardyr/factorization.hpp"
#include "hardyr/fourier_poly.hpp"
#include "hardyr/interpolation.hpp"
#include "hardyr/json_io.hpp"
#include "hardyr/subspace.hpp"
#include "hardyr/szego.hpp"

namespace {

using hardyr::Complex;
using hardyr::Json;

struct RunConfig {
  int grid_size = 0;    // 0 = automatic per operation
  int degree = 0;       // 0 = per-subcommand default
  double tol = 1e-9;
  std::string in_path;
  std::string out_path;
  std::string format = "json";
};

std::string read_input(const RunConfig& cfg) {
  if (!cfg.in_path.empty()) {
    std::ifstream in(cfg.in_path);
    if (!in) throw hardyr::SchemaError("cannot open input file: " + cfg.in_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

nlohmann::json parse_input(const RunConfig& cfg) {
  const std::string text = read_input(cfg);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw hardyr::SchemaError("input is not valid JSON");
  return j;
}

std::vector<Complex> complex_list(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw hardyr::SchemaError(path + ": expected a nonempty array");
  std::vector<Complex> out;
  for (const auto& entry : j) out.push_back(hardyr::complex_from_json(entry));
  return out;
}

int power_of_two_or(const RunConfig& cfg, int fallback) {
  if (cfg.grid_size == 0) return fallback;
  if (!hardyr::is_power_of_two(cfg.grid_size) || cfg.grid_size < 16 ||
      cfg.grid_size > (1 << 16))
    throw hardyr::SchemaError("--grid must be a power of two in [16, 65536]");
  return cfg.grid_size;
}

Json report_shell(const std::string& subcommand, const nlohmann::json& input) {
  Json report;
  report["subcommand"] = subcommand;
  report["input"] = Json(input);
  return report;
}

// ---------------------------------------------------------------------------
// factorize / riesz

Json factorize_output(const hardyr::FourierPoly& f,
                      const hardyr::FactorizationResult& res, int grid,
                      double tol) {
  Json out;
  out["inner"] = hardyr::rational_to_json(res.inner);
  out["inner_taylor"] = hardyr::poly_to_json(res.inner.taylor(64));
  out["outer"] = hardyr::poly_to_json(res.outer);
  out["sign"] = res.sign;
  out["residual"] = res.residual;

  double unimodular_defect = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    unimodular_defect = std::max(
        unimodular_defect, std::abs(std::abs(res.inner.eval_circle(theta)) - 1.0));
  }
  const double fnorm = hardyr::norm(f, hardyr::NormKind::L2);
  Json checks;
  checks["unimodular_defect"] = unimodular_defect;
  checks["relative_residual"] = fnorm > 0 ? res.residual / fnorm : 0.0;
  checks["input_real_type"] = f.is_real_type(tol);
  checks["inner_real_type"] = res.inner.is_real_type(tol);
  checks["outer_real_type"] = res.outer.is_real_type(tol);
  checks["pass"] = unimodular_defect <= 1e-6 && res.residual <= tol * std::max(1.0, fnorm);
  out["checks"] = std::move(checks);
  return out;
}

int run_factorize(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  const hardyr::FourierPoly f = hardyr::poly_from_json(input);
  const hardyr::FactorizationResult res = hardyr::inner_outer(f);
  Json report = report_shell("factorize", input);
  const int grid = power_of_two_or(cfg, 256);
  report["output"] = factorize_output(f, res, grid, cfg.tol);
  report["status"] = "ok";
  std::cout << hardyr::dump_json17(report);
  return 0;
}

int run_riesz(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  const hardyr::FourierPoly f = hardyr::poly_from_json(input);
  hardyr::RieszOptions options;
  options.grid_size = power_of_two_or(cfg, options.grid_size);
  if (cfg.degree > 0) options.outer_degree = cfg.degree;
  const hardyr::RieszFactorization res = hardyr::riesz_factorize(f, options);

  const double l1 = hardyr::norm(f, hardyr::NormKind::L1, options.grid_size);
  const double n1 = hardyr::norm(res.f1, hardyr::NormKind::L2);
  const double n2 = hardyr::norm(res.f2, hardyr::NormKind::L2);
  const hardyr::FourierPoly product = hardyr::multiply(res.f1, res.f2);
  const double recon =
      hardyr::norm(product.truncated(0, f.is_zero() ? 0 : f.hi()) - f,
                   hardyr::NormKind::L2);

  Json report = report_shell("riesz", input);
  Json out;
  out["f1"] = hardyr::poly_to_json(res.f1);
  out["f2"] = hardyr::poly_to_json(res.f2);
  Json checks;
  checks["l1_norm"] = l1;
  checks["f1_l2_squared"] = n1 * n1;
  checks["f2_l2_squared"] = n2 * n2;
  checks["norm_chain_gap"] =
      std::max(std::abs(l1 - n1 * n1), std::abs(l1 - n2 * n2));
  checks["reconstruction_residual"] = recon;
  checks["pass"] = checks["norm_chain_gap"].get<double>() <= 1e-6 * std::max(1.0, l1);
  out["checks"] = std::move(checks);
  report["output"] = std::move(out);
  report["status"] = "ok";
  std::cout << hardyr::dump_json17(report);
  return 0;
}

// ---------------------------------------------------------------------------
// np / cf

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(hardyr::complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_np(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  if (!input.is_object() || !input.contains("nodes") || !input.contains("values"))
    throw hardyr::SchemaError("np: expected {\"nodes\": [...], \"values\": [...]}");
  const std::vector<Complex> nodes = complex_list(input["nodes"], "nodes");
  const std::vector<Complex> values = complex_list(input["values"], "values");
  const hardyr::InterpolationProblem problem =
      hardyr::InterpolationProblem::create(nodes, values);
  const hardyr::PickReport pick = hardyr::np_solvable_real(problem);

  Json report = report_shell("np", input);
  Json out;
  out["pick_matrix"] = matrix_to_json(pick.matrix);
  out["min_eigenvalue"] = pick.min_eigenvalue;
  out["solvable"] = pick.solvable;
  out["forced_real_violations"] = pick.forced_real_violations;
  out["real_nodes"] = problem.real_node_count();
  out["real_pairs"] = problem.real_pair_count();

  if (pick.solvable) {
    const hardyr::NPRealSolution sol = hardyr::np_solve_real(problem);
    const hardyr::InterpolationCheck check = hardyr::verify_interpolant(
        sol.rational, nodes, values, std::max(cfg.tol, 1e-7), true);
    out["solution"] = hardyr::poly_to_json(sol.taylor);
    out["rational"] = hardyr::rational_to_json(sol.rational);
    out["residuals"] = check.residuals;
    out["sup_norm"] = check.sup_norm;
    out["real_type"] = check.real_type;
    out["verified"] = check.pass;
  }
  report["output"] = std::move(out);
  report["status"] = pick.solvable ? "ok" : "infeasible";
  std::cout << hardyr::dump_json17(report);
  return pick.solvable ? 0 : 2;
}

int run_cf(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  if (!input.is_object() || !input.contains("taylor"))
    throw hardyr::SchemaError("cf: expected {\"taylor\": [...]}");
  hardyr::CFProblem problem{complex_list(input["taylor"], "taylor")};
  const Eigen::MatrixXcd t = hardyr::cf_toeplitz(problem);
  const double sigma_max = t.jacobiSvd().singularValues()(0);
  const bool solvable = sigma_max <= 1.0 + hardyr::kDefaultPsdTol;

  Json report = report_shell("cf", input);
  Json out;
  out["toeplitz_norm"] = sigma_max;
  out["solvable"] = solvable;
  if (solvable) {
    const hardyr::NPSolution sol = hardyr::cf_solve(problem);
    double coeff_residual = 0.0;
    const auto target = problem.taylor;
    const auto got = sol.rational.taylor(static_cast<int>(target.size()) - 1)
                         .taylor_coeffs(static_cast<int>(target.size()) - 1);
    for (size_t i = 0; i < target.size(); ++i)
      coeff_residual = std::max(coeff_residual, std::abs(got[i] - target[i]));
    const hardyr::InterpolationCheck check =
        hardyr::verify_interpolant(sol.rational, {}, {}, std::max(cfg.tol, 1e-7));
    out["solution"] = hardyr::poly_to_json(sol.taylor);
    out["rational"] = hardyr::rational_to_json(sol.rational);
    out["coefficient_residual"] = coeff_residual;
    out["sup_norm"] = check.sup_norm;
    out["verified"] = coeff_residual <= std::max(cfg.tol, 1e-7) &&
                      check.sup_norm <= 1.0 + std::max(cfg.tol, 1e-7);
  }
  report["output"] = std::move(out);
  report["status"] = solvable ? "ok" : "infeasible";
  std::cout << hardyr::dump_json17(report);
  return solvable ? 0 : 2;
}

// ---------------------------------------------------------------------------
// szego / subspace

int run_szego(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  if (!input.is_object() || !input.contains("weight") || !input["weight"].is_array())
    throw hardyr::SchemaError("szego: expected {\"weight\": [...], \"degree\": N}");
  std::vector<double> samples;
  for (const auto& v : input["weight"]) {
    if (!v.is_number()) throw hardyr::SchemaError("weight: samples must be numbers");
    samples.push_back(v.get<double>());
  }
  int degree = cfg.degree;
  if (input.contains("degree")) degree = input["degree"].get<int>();
  if (degree <= 0) degree = 64;

  const hardyr::Weight w = hardyr::Weight::create(std::move(samples));
  const double gm = hardyr::geometric_mean(w);
  const double inf = hardyr::szego_infimum_ls(w, degree);

  Json report = report_shell("szego", input);
  Json out;
  out["degree"] = degree;
  out["infimum"] = inf;
  out["geometric_mean"] = gm;
  out["gap"] = inf - gm;
  report["output"] = std::move(out);
  report["status"] = "ok";
  std::cout << hardyr::dump_json17(report);
  return 0;
}

int run_subspace(const RunConfig& cfg) {
  const nlohmann::json input = parse_input(cfg);
  if (!input.is_object() || !input.contains("generators") || !input.contains("powers") ||
      !input.contains("budget"))
    throw hardyr::SchemaError(
        "subspace: expected {\"generators\": [poly...], \"powers\": [1]|[2,3], \"budget\": N}");
  std::vector<hardyr::FourierPoly> generators;
  for (const auto& g : input["generators"]) generators.push_back(hardyr::poly_from_json(g));
  std::set<int> powers;
  for (const auto& p : input["powers"]) powers.insert(p.get<int>());
  const int budget = input["budget"].get<int>();

  const hardyr::SubspaceBasis basis =
      hardyr::generate_invariant(generators, powers, budget);
  const hardyr::ClassificationResult cls = hardyr::classify(basis, powers);

  Json report = report_shell("subspace", input);
  Json out;
  out["form"] = hardyr::to_string(cls.form);
  out["phi"] = hardyr::poly_to_json(cls.phi);
  out["c"] = cls.c;
  out["fit"] = cls.fit;
  out["origin_zero_folded"] = cls.origin_zero_folded;
  out["dimension"] = basis.dimension();
  out["safe_degree"] = basis.safe_degree;
  report["output"] = std::move(out);
  report["status"] = "ok";
  std::cout << hardyr::dump_json17(report);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: re-check a previously emitted report against its own input

int run_verify(const RunConfig& cfg) {
  const nlohmann::json report = parse_input(cfg);
  if (!report.is_object() || !report.contains("subcommand") || !report.contains("input") ||
      !report.contains("output"))
    throw hardyr::SchemaError("verify: expected a previously emitted report");
  const std::string sub = report["subcommand"].get<std::string>();
  const nlohmann::json& input = report["input"];
  const nlohmann::json& output = report["output"];
  const double tol = std::max(cfg.tol, 1e-7);

  Json result;
  result["subcommand"] = "verify";
  result["verifies"] = sub;
  bool valid = false;
  bool negative = false;

  if (sub == "factorize") {
    const hardyr::FourierPoly f = hardyr::poly_from_json(input);
    const hardyr::RationalDiskFunction inner = hardyr::rational_from_json(output["inner"]);
    const hardyr::FourierPoly outer = hardyr::poly_from_json(output["outer"]);
    const double sign = output["sign"].get<int>();
    const int grid = power_of_two_or(cfg, 256);
    double residual = 0.0, unimodular = 0.0;
    for (int k = 0; k < grid; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / grid;
      const Complex lhs = hardyr::eval_circle(f, theta);
      const Complex inner_v = inner.eval_circle(theta);
      residual += std::norm(lhs - sign * inner_v * hardyr::eval_circle(outer, theta));
      unimodular = std::max(unimodular, std::abs(std::abs(inner_v) - 1.0));
    }
    residual = std::sqrt(residual / grid);
    const double fnorm = hardyr::norm(f, hardyr::NormKind::L2);
    valid = residual <= tol * std::max(1.0, fnorm) && unimodular <= 1e-6;
    result["residual"] = residual;
    result["unimodular_defect"] = unimodular;
  } else if (sub == "riesz") {
    const hardyr::FourierPoly f = hardyr::poly_from_json(input);
    const hardyr::FourierPoly f1 = hardyr::poly_from_json(output["f1"]);
    const hardyr::FourierPoly f2 = hardyr::poly_from_json(output["f2"]);
    const double l1 = hardyr::norm(f, hardyr::NormKind::L1, power_of_two_or(cfg, 4096));
    const double n1 = hardyr::norm(f1, hardyr::NormKind::L2);
    const double n2 = hardyr::norm(f2, hardyr::NormKind::L2);
    const double gap = std::max(std::abs(l1 - n1 * n1), std::abs(l1 - n2 * n2));
    valid = gap <= 1e-6 * std::max(1.0, l1);
    result["norm_chain_gap"] = gap;
  } else if (sub == "np") {
    const std::vector<Complex> nodes = complex_list(input["nodes"], "nodes");
    const std::vector<Complex> values = complex_list(input["values"], "values");
    const hardyr::InterpolationProblem problem =
        hardyr::InterpolationProblem::create(nodes, values);
    const hardyr::PickReport pick = hardyr::np_solvable_real(problem);
    if (!output["solvable"].get<bool>()) {
      valid = !pick.solvable;
      negative = true;
    } else if (output.contains("rational")) {
      const hardyr::RationalDiskFunction g = hardyr::rational_from_json(output["rational"]);
      const hardyr::InterpolationCheck check =
          hardyr::verify_interpolant(g, nodes, values, tol, true);
      valid = pick.solvable && check.pass;
      result["max_residual"] = check.max_residual;
      result["sup_norm"] = check.sup_norm;
    }
  } else if (sub == "cf") {
    hardyr::CFProblem problem{complex_list(input["taylor"], "taylor")};
    const double sigma = hardyr::cf_toeplitz(problem).jacobiSvd().singularValues()(0);
    if (!output["solvable"].get<bool>()) {
      valid = sigma > 1.0 + hardyr::kDefaultPsdTol;
      negative = true;
    } else {
      const hardyr::RationalDiskFunction g = hardyr::rational_from_json(output["rational"]);
      const int n = static_cast<int>(problem.taylor.size()) - 1;
      const auto got = g.taylor(n).taylor_coeffs(n);
      double coeff_residual = 0.0;
      for (size_t i = 0; i < problem.taylor.size(); ++i)
        coeff_residual = std::max(coeff_residual, std::abs(got[i] - problem.taylor[i]));
      const hardyr::InterpolationCheck check = hardyr::verify_interpolant(g, {}, {}, tol);
      valid = sigma <= 1.0 + hardyr::kDefaultPsdTol && coeff_residual <= tol &&
              check.sup_norm <= 1.0 + tol;
      result["coefficient_residual"] = coeff_residual;
      result["sup_norm"] = check.sup_norm;
    }
  } else if (sub == "szego") {
    std::vector<double> samples;
    for (const auto& v : input["weight"]) samples.push_back(v.get<double>());
    const hardyr::Weight w = hardyr::Weight::create(std::move(samples));
    const int degree = output["degree"].get<int>();
    const double inf = hardyr::szego_infimum_ls(w, degree);
    const double gm = hardyr::geometric_mean(w);
    valid = std::abs(inf - output["infimum"].get<double>()) <= tol * std::max(1.0, inf) &&
            std::abs(gm - output["geometric_mean"].get<double>()) <= tol * std::max(1.0, gm);
    result["infimum"] = inf;
    result["geometric_mean"] = gm;
  } else if (sub == "subspace") {
    std::vector<hardyr::FourierPoly> generators;
    for (const auto& g : input["generators"]) generators.push_back(hardyr::poly_from_json(g));
    std::set<int> powers;
    for (const auto& p : input["powers"]) powers.insert(p.get<int>());
    const hardyr::SubspaceBasis basis =
        hardyr::generate_invariant(generators, powers, input["budget"].get<int>());
    const hardyr::ClassificationResult cls = hardyr::classify(basis, powers);
    valid = std::string(hardyr::to_string(cls.form)) == output["form"].get<std::string>() &&
            std::abs(cls.c - output["c"].get<double>()) <= tol &&
            cls.fit <= 1e-4;
    result["form"] = hardyr::to_string(cls.form);
    result["c"] = cls.c;
    result["fit"] = cls.fit;
  } else {
    throw hardyr::SchemaError("verify: unknown subcommand in report: " + sub);
  }

  result["valid"] = valid;
  std::cout << hardyr::dump_json17(result);
  if (!valid) return 1;
  return negative ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardyr: numerical toolkit for Hardy-space computations with real Fourier coefficients"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--grid", cfg.grid_size, "Circle grid size (power of two, 16..65536)");
  app.add_option("--degree", cfg.degree, "Truncation degree where applicable");
  app.add_option("--tol", cfg.tol, "Comparison tolerance (default 1e-9)");
  app.add_option("--in", cfg.in_path, "Input JSON path (default: stdin)");
  app.add_option("--out", cfg.out_path, "Output path (default: stdout)");
  app.add_option("--format", cfg.format, "Output format (json)");

  app.add_subcommand("factorize", "Inner-outer factorization of an analytic polynomial");
  app.add_subcommand("riesz", "Riesz factorization of a real-type analytic polynomial");
  app.add_subcommand("np", "Real-symmetric Nevanlinna-Pick interpolation");
  app.add_subcommand("cf", "Caratheodory-Fejer coefficient interpolation");
  app.add_subcommand("szego", "Weighted least-squares infimum vs geometric mean");
  app.add_subcommand("subspace", "Generate and classify a shift-invariant subspace");
  app.add_subcommand("verify", "Re-check a previously emitted report");

  CLI11_PARSE(app, argc, argv);

  // Redirect stdout to --out if requested.
  std::ofstream out_file;
  std::streambuf* saved = nullptr;
  if (!cfg.out_path.empty()) {
    out_file.open(cfg.out_path);
    if (!out_file) {
      std::cerr << "cannot open output file: " << cfg.out_path << "\n";
      return 1;
    }
    saved = std::cout.rdbuf(out_file.rdbuf());
  }

  int status = 1;
  try {
    if (cfg.format != "json") throw hardyr::SchemaError("--format must be json");
    if (app.got_subcommand("factorize")) status = run_factorize(cfg);
    else if (app.got_subcommand("riesz")) status = run_riesz(cfg);
    else if (app.got_subcommand("np")) status = run_np(cfg);
    else if (app.got_subcommand("cf")) status = run_cf(cfg);
    else if (app.got_subcommand("szego")) status = run_szego(cfg);
    else if (app.got_subcommand("subspace")) status = run_subspace(cfg);
    else if (app.got_subcommand("verify")) status = run_verify(cfg);
  } catch (const hardyr::NotSolvableError& e) {
    Json err;
    err["status"] = "infeasible";
    err["error"] = e.what();
    std::cout << hardyr::dump_json17(err);
    status = 2;
  } catch (const hardyr::NotContractionError& e) {
    Json err;
    err["status"] = "infeasible";
    err["error"] = e.what();
    std::cout << hardyr::dump_json17(err);
    status = 2;
  } catch (const std::exception& e) {
    Json err;
    err["status"] = "error";
    err["error"] = e.what();
    std::cout << hardyr::dump_json17(err);
    status = 1;
  }

  if (saved) std::cout.rdbuf(saved);
  return status;
}
