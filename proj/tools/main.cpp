#include <atomic>
#include <complex>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/evolution.hpp"
#include "fracshift/fock.hpp"
#include "fracshift/oscillatory.hpp"
#include "fracshift/supershift.hpp"
#include "fracshift/verify.hpp"
#include "fracshift/version.hpp"
#include "fracshift/weights.hpp"
#include "output.hpp"

namespace {

using namespace fracshift;
using cli::num17;
using Cx = std::complex<double>;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitTolerance = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::usage:
    case Errc::invalid_argument:
      return kExitUsage;
    case Errc::quadrature_tolerance:
      return kExitTolerance;
    default:
      return kExitDomain;
  }
}

struct GridSpec {
  double re0 = -1.0, re1 = 1.0;
  int re_count = 41;
  double im0 = 0.0, im1 = 0.0;
  int im_count = 1;

  std::vector<Cx> points() const {
    std::vector<Cx> out;
    out.reserve(static_cast<std::size_t>(re_count) * im_count);
    for (int j = 0; j < im_count; ++j) {
      const double im = im_count > 1 ? im0 + (im1 - im0) * j / (im_count - 1) : im0;
      for (int i = 0; i < re_count; ++i) {
        const double re = re_count > 1 ? re0 + (re1 - re0) * i / (re_count - 1) : re0;
        out.emplace_back(re, im);
      }
    }
    return out;
  }
};

void parse_axis(const std::string& text, double* lo, double* hi, int* count) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    raise(Errc::usage, "grid axis must be lo:hi:count, got '" + text + "'");
  try {
    *lo = std::stod(text.substr(0, c1));
    *hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    *count = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    raise(Errc::usage, "grid axis must be numeric lo:hi:count, got '" + text + "'");
  }
  if (*count < 1) raise(Errc::usage, "grid axis count must be >= 1");
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto comma = text.find(',');
  parse_axis(text.substr(0, comma), &g.re0, &g.re1, &g.re_count);
  if (comma != std::string::npos) {
    parse_axis(text.substr(comma + 1), &g.im0, &g.im1, &g.im_count);
  }
  return g;
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      raise(Errc::usage, "ladder must be a comma-separated integer list");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) raise(Errc::usage, "ladder must not be empty");
  return out;
}

std::string out_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

// ---------------------------------------------------------------- weights --

int cmd_weights_show(const std::string& family_name, int n_max, const std::string& out_dir) {
  cli::Stopwatch watch;
  const WeightFamily family = parse_family(family_name);
  const QuadratureConfig config = default_quadrature_config();
  const auto carleman = carleman_diagnostic(family, std::max(n_max, 10));

  cli::CsvWriter csv({"n", "phi_n", "mellin_moment", "product", "carleman_term"});
  bool all_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const double phi = phi_coefficient(family, n);
    const double moment = mellin_moment(family, n, config);
    const double product = phi * moment / family.normalization;
    if (std::abs(product - 1.0) > config.rel_tol) all_ok = false;
    const double term = n >= 1 ? carleman.partial_sums[static_cast<std::size_t>(n - 1)] -
                                     (n >= 2 ? carleman.partial_sums[static_cast<std::size_t>(n - 2)] : 0.0)
                               : 0.0;
    csv.add_row({std::to_string(n), num17(phi), num17(moment), num17(product), num17(term)});
  }

  const std::string csv_path = out_path(out_dir, "weights_show.csv");
  csv.write(csv_path);

  cli::RunManifest manifest;
  manifest.command = "weights show";
  manifest.parameters["family"] = family.name;
  manifest.parameters["n"] = n_max;
  manifest.parameters["normalization"] = family.normalization;
  manifest.tolerances["rel_tol"] = config.rel_tol;
  manifest.files = {csv_path};
  manifest.pass_fail_summary = all_ok ? "PASS" : "FAIL";
  manifest.duration_ms = watch.elapsed_ms();
  manifest.write(out_path(out_dir, "weights_show_manifest.json"), kVersion);

  std::cout << (all_ok ? "PASS" : "FAIL") << " moment products within tolerance, wrote "
            << csv_path << "\n";
  return all_ok ? kExitOk : kExitTolerance;
}

// ------------------------------------------------------------- supershift --

int cmd_supershift_eval(const std::string& family_name, int n, double a, const GridSpec& grid,
                        const std::string& out_dir) {
  cli::Stopwatch watch;
  const SupershiftSpec spec{n, a, parse_family(family_name)};
  spec.validate();
  const auto points = grid.points();
  if (std::isfinite(spec.family.domain_radius)) {
    const double bound = spec.family.domain_radius / a;
    for (const auto& z : points)
      if (std::abs(z) >= bound)
        raise(Errc::domain, "grid leaves the admissible domain |z| < r/a = " + num17(bound));
  }

  struct Row {
    Cx z, f;
    double err;
  };
  std::vector<Row> rows(points.size());
  cli::parallel_for(points.size(), [&](std::size_t i) {
    const Cx z = points[i];
    const Cx f = fractional_F(spec, z);
    const Cx limit = weight_eval(spec.family, Cx(0.0, 1.0) * a * z);
    rows[i] = {z, f, std::abs(f - limit)};
  });

  cli::CsvWriter csv({"z_re", "z_im", "F_re", "F_im", "limit_err"});
  for (const auto& row : rows)
    csv.add_row({num17(row.z.real()), num17(row.z.imag()), num17(row.f.real()),
                 num17(row.f.imag()), num17(row.err)});
  const std::string csv_path = out_path(out_dir, "supershift_eval.csv");
  csv.write(csv_path);

  cli::RunManifest manifest;
  manifest.command = "supershift eval";
  manifest.parameters["family"] = spec.family.name;
  manifest.parameters["n"] = n;
  manifest.parameters["a"] = a;
  manifest.parameters["grid_points"] = points.size();
  manifest.files = {csv_path};
  manifest.duration_ms = watch.elapsed_ms();
  manifest.write(out_path(out_dir, "supershift_eval_manifest.json"), kVersion);
  std::cout << "wrote " << csv_path << "\n";
  return kExitOk;
}

int cmd_supershift_converge(const std::string& family_name, double a,
                            const std::vector<int>& ladder, const GridSpec& grid,
                            const std::string& out_dir) {
  cli::Stopwatch watch;
  const WeightFamily family = parse_family(family_name);
  const auto points = grid.points();

  std::vector<double> errors(ladder.size());
  cli::parallel_for(ladder.size(), [&](std::size_t i) {
    const SupershiftSpec spec{ladder[i], a, family};
    errors[i] = supershift_error(spec, points);
  });

  bool monotone = true;
  cli::CsvWriter csv({"n", "sup_error"});
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (i > 0 && errors[i] >= errors[i - 1]) monotone = false;
    csv.add_row({std::to_string(ladder[i]), num17(errors[i])});
  }
  csv.add_comment(std::string("verdict=") + (monotone ? "PASS" : "FAIL"));
  const std::string csv_path = out_path(out_dir, "supershift_converge.csv");
  csv.write(csv_path);

  cli::RunManifest manifest;
  manifest.command = "supershift converge";
  manifest.parameters["family"] = family.name;
  manifest.parameters["a"] = a;
  manifest.parameters["ladder"] = ladder;
  manifest.files = {csv_path};
  manifest.pass_fail_summary = monotone ? "PASS" : "FAIL";
  manifest.duration_ms = watch.elapsed_ms();
  manifest.write(out_path(out_dir, "supershift_converge_manifest.json"), kVersion);
  std::cout << (monotone ? "PASS" : "FAIL") << " monotone error decrease, wrote " << csv_path
            << "\n";
  return monotone ? kExitOk : kExitTolerance;
}

// ----------------------------------------------------------------- evolve --

int cmd_evolve(const std::string& family_name, int n, double a, int truncation,
               const std::string& x_axis, const std::string& t_axis, double h,
               const std::string& exponent_convention, const std::string& prefactor_convention,
               const std::string& out_dir) {
  cli::Stopwatch watch;
  double x0, x1, t0, t1;
  int nx, nt;
  parse_axis(x_axis, &x0, &x1, &nx);
  parse_axis(t_axis, &t0, &t1, &nt);
  constexpr double kTMin = 0.1;
  if (std::min(std::abs(t0), std::abs(t1)) < kTMin || t0 * t1 <= 0.0)
    raise(Errc::usage, "t range must exclude |t| < " + num17(kTMin));

  EvolutionConventions conv;
  conv.exponent_half = exponent_convention != "literal";
  conv.prefactor_pow_m = prefactor_convention != "literal";

  const SupershiftSpec spec{n, a, parse_family(family_name)};
  const auto sol = EvolutionSolution::build(spec, truncation, conv);

  struct Row {
    double x, t;
    Cx psi;
    double tail;
  };
  std::vector<Row> rows(static_cast<std::size_t>(nx) * nt);
  cli::parallel_for(rows.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) % nx;
    const int j = static_cast<int>(idx) / nx;
    const double x = nx > 1 ? x0 + (x1 - x0) * i / (nx - 1) : x0;
    const double t = nt > 1 ? t0 + (t1 - t0) * j / (nt - 1) : t0;
    const auto v = psi_eval(sol, x, t);
    rows[idx] = {x, t, v.value, v.tail_ratio};
  });

  ResidualBox box;
  box.x0 = x0;
  box.x1 = x1;
  box.t0 = t0;
  box.t1 = t1;
  box.nx = std::min(nx, 17);
  box.nt = std::min(nt, 9);
  const auto residual = pde_residual(sol, box, h, h);

  cli::CsvWriter csv({"x", "t", "psi_re", "psi_im", "psi_abs", "tail_diag"});
  for (const auto& row : rows)
    csv.add_row({num17(row.x), num17(row.t), num17(row.psi.real()), num17(row.psi.imag()),
                 num17(std::abs(row.psi)), num17(row.tail)});
  csv.add_comment("residual_normalized=" + num17(residual.normalized) + " h=" + num17(h));
  const std::string csv_path = out_path(out_dir, "evolve.csv");
  csv.write(csv_path);

  cli::RunManifest manifest;
  manifest.command = "evolve";
  manifest.parameters["family"] = spec.family.name;
  manifest.parameters["n"] = n;
  manifest.parameters["a"] = a;
  manifest.parameters["M"] = truncation;
  manifest.parameters["x"] = x_axis;
  manifest.parameters["t"] = t_axis;
  manifest.parameters["h"] = h;
  manifest.tolerances["t_min"] = kTMin;
  manifest.conventions["exponent"] = conv.exponent_half ? "half" : "literal";
  manifest.conventions["prefactor"] = conv.prefactor_pow_m ? "pow_m" : "literal";
  manifest.conventions["summation_start_index"] = 0;
  manifest.parameters["residual_normalized"] = residual.normalized;
  manifest.files = {csv_path};
  manifest.duration_ms = watch.elapsed_ms();
  manifest.write(out_path(out_dir, "evolve_manifest.json"), kVersion);
  std::cout << "residual_normalized=" << num17(residual.normalized) << ", wrote " << csv_path
            << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite, const std::string& out_dir) {
  cli::Stopwatch watch;
  const QuadratureConfig config = default_quadrature_config();
  const auto results = run_verify_suite(suite, config.rel_tol);

  bool all_pass = true;
  cli::RunManifest manifest;
  manifest.command = "verify";
  manifest.parameters["suite"] = suite;
  manifest.tolerances["rel_tol"] = config.rel_tol;
  for (const auto& check : results) {
    all_pass = all_pass && check.pass;
    cli::OrderedJson entry;
    entry["name"] = check.name;
    entry["measured"] = check.measured;
    entry["tolerance"] = check.tolerance;
    entry["pass"] = check.pass;
    manifest.checks.push_back(entry);
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " measured=" << num17(check.measured)
              << " tol=" << num17(check.tolerance) << "\n";
  }
  manifest.pass_fail_summary = all_pass ? "PASS" : "FAIL";
  manifest.duration_ms = watch.elapsed_ms();
  const std::string report_path = out_path(out_dir, "verify_" + suite + ".json");
  manifest.write(report_path, kVersion);
  std::cout << (all_pass ? "PASS" : "FAIL") << " suite " << suite << ", wrote " << report_path
            << "\n";
  return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracshift: weighted Fock-space supershift numerics"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "directory for CSV/JSON outputs")->capture_default_str();

  // weights show
  auto* weights = app.add_subcommand("weights", "weight family inspection");
  weights->require_subcommand(1);
  auto* weights_show = weights->add_subcommand("show", "phi_n, Mellin moments, Carleman terms");
  std::string family_name = "exp";
  int n_max = 8;
  weights_show->add_option("family", family_name, "exp | ml:<rho>:<mu> | gamma-shifted")
      ->required();
  weights_show->add_option("--n", n_max, "max coefficient index")->capture_default_str();

  // supershift eval/converge
  auto* supershift_cmd = app.add_subcommand("supershift", "supershift sequences");
  supershift_cmd->require_subcommand(1);
  auto* ss_eval = supershift_cmd->add_subcommand("eval", "evaluate F_{n,phi} on a grid");
  auto* ss_conv = supershift_cmd->add_subcommand("converge", "sup-error across an n ladder");
  std::string ss_family, grid_text = "-1:1:41", ladder_text = "21,81,321";
  int ss_n = 25;
  double ss_a = 2.0;
  for (auto* sub : {ss_eval, ss_conv}) {
    sub->add_option("family", ss_family, "exp | ml:<rho>:<mu> | gamma-shifted")->required();
    sub->add_option("--a", ss_a, "shift parameter (>= 1)")->capture_default_str();
    sub->add_option("--grid", grid_text, "re0:re1:count[,im0:im1:count]")->capture_default_str();
  }
  ss_eval->add_option("--n", ss_n, "sequence order")->capture_default_str();
  ss_conv->add_option("--ladder", ladder_text, "comma-separated n ladder")->capture_default_str();

  // evolve
  auto* evolve = app.add_subcommand("evolve", "free evolution of the supershift datum");
  std::string ev_family, ev_x = "-3:3:121", ev_t = "0.25:1:16";
  std::string exponent_convention = "oracle", prefactor_convention = "oracle";
  int ev_n = 11, ev_m = 24;
  double ev_a = 2.0, ev_h = 1e-3;
  evolve->add_option("family", ev_family, "exp | ml:<rho>:<mu> | gamma-shifted")->required();
  evolve->add_option("--n", ev_n, "sequence order (odd unless M <= 1)")->capture_default_str();
  evolve->add_option("--a", ev_a, "shift parameter")->capture_default_str();
  evolve->add_option("--M", ev_m, "mode truncation")->capture_default_str();
  evolve->add_option("--x", ev_x, "x grid lo:hi:count")->capture_default_str();
  evolve->add_option("--t", ev_t, "t grid lo:hi:count (|t| >= 0.1)")->capture_default_str();
  evolve->add_option("--step", ev_h, "finite-difference step h")->capture_default_str();
  evolve->add_option("--exponent-convention", exponent_convention, "oracle | literal")
      ->capture_default_str();
  evolve->add_option("--prefactor-convention", prefactor_convention, "oracle | literal")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "oracle verification suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "im | mellin | fock | supershift | all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (weights_show->parsed()) return cmd_weights_show(family_name, n_max, out_dir);
    if (ss_eval->parsed())
      return cmd_supershift_eval(ss_family, ss_n, ss_a, parse_grid(grid_text), out_dir);
    if (ss_conv->parsed())
      return cmd_supershift_converge(ss_family, ss_a, parse_ladder(ladder_text),
                                     parse_grid(grid_text), out_dir);
    if (evolve->parsed())
      return cmd_evolve(ev_family, ev_n, ev_a, ev_m, ev_x, ev_t, ev_h, exponent_convention,
                        prefactor_convention, out_dir);
    if (verify->parsed()) return cmd_verify(suite, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
