// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Tolerances are pinned here, not configurable.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "fracshift/complex_math.hpp"
#include "fracshift/evolution.hpp"
#include "fracshift/fock.hpp"
#include "fracshift/oscillatory.hpp"
#include "fracshift/supershift.hpp"
#include "fracshift/weights.hpp"
#include "support.hpp"

using namespace fracshift;
using test_support::Cx;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// C1: |sum_j C_j(n,a) - 1| <= n 2^-50 over n in {5..199 odd}, a in {1,1.5,2,4}.
Outcome criterion_partition() {
  double worst = 0.0, worst_budget = 1.0;
  double worst_double = 0.0;
  for (int n = 5; n <= 199; n += 2)
    for (double a : {1.0, 1.5, 2.0, 4.0}) {
      const auto set = coefficients(n, a);
      const double budget = n * std::pow(2.0, -50);
      if (set.partition_defect / budget > worst / worst_budget) {
        worst = set.partition_defect;
        worst_budget = budget;
      }
      worst_double = std::max(worst_double, set.partition_defect_double);
    }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max defect %.3e (budget %.3e); rounded-double sum defect up to %.3e", worst,
                worst_budget, worst_double);
  return {worst <= worst_budget, buf};
}

// C2: product vs sum form to 1e-9 relative on 100 random triples.
Outcome criterion_form_equality() {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> un(1, 30);
  std::uniform_real_distribution<double> ua(1.0, 4.0), uz(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = un(rng);
    const double a = ua(rng);
    Cx z(uz(rng), uz(rng));
    if (std::abs(z) > 3.0) z *= 3.0 / std::abs(z);
    const Cx p = classical_F(n, a, z, ClassicalForm::product);
    const Cx s = classical_F(n, a, z, ClassicalForm::sum);
    worst = std::max(worst, std::abs(p - s) / std::abs(p));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max relative gap %.3e (tol 1e-9)", worst);
  return {worst <= 1e-9, buf};
}

// C3: sup-grid supershift error strictly decreasing along n = 21, 81, 321.
Outcome criterion_convergence_trend() {
  std::vector<Cx> grid_exp, grid_ml;
  for (int i = 0; i <= 40; ++i) grid_exp.emplace_back(-1.0 + 0.05 * i, 0.0);
  for (int i = 0; i <= 20; ++i) grid_ml.emplace_back(-0.5 + 0.05 * i, 0.0);

  std::string detail;
  bool pass = true;
  {
    double prev = 1e300;
    detail += "exp a=2:";
    for (int n : {21, 81, 321}) {
      const double err = supershift_error({n, 2.0, exponential_family()}, grid_exp);
      char buf[40];
      std::snprintf(buf, sizeof(buf), " %.3e", err);
      detail += buf;
      pass = pass && err < prev;
      prev = err;
    }
  }
  {
    double prev = 1e300;
    detail += "; ml:2:1 a=1.5:";
    const auto family = mittag_leffler_family(2.0, 1.0);
    for (int n : {21, 81, 321}) {
      const double err = supershift_error({n, 1.5, family}, grid_ml);
      char buf[40];
      std::snprintf(buf, sizeof(buf), " %.3e", err);
      detail += buf;
      pass = pass && err < prev;
      prev = err;
    }
  }
  return {pass, detail};
}

// C4: mellin_moment * phi_coefficient = normalization to 1e-6 relative, n <= 12.
Outcome criterion_moment_consistency() {
  const QuadratureConfig q = default_quadrature_config();
  double worst = 0.0;
  for (const auto& family :
       {exponential_family(), mittag_leffler_family(2.0, 1.0), gamma_shifted_family()}) {
    for (int n = 0; n <= 12; ++n) {
      const double product = mellin_moment(family, n, q) * phi_coefficient(family, n);
      worst = std::max(worst, std::abs(product / family.normalization - 1.0));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max relative deviation %.3e (tol 1e-6)", worst);
  return {worst <= 1e-6, buf};
}

// C5: closed form vs the eps->0 quadrature limit; ladder gaps monotone.
Outcome criterion_oscillatory() {
  QuadratureConfig q;
  q.rel_tol = 1e-2;  // tail-bound guard only; panel count is phase-driven
  int monotone_violations = 0;
  double worst_limit = 0.0, worst_raw = 0.0;
  for (int m = 0; m <= 4; ++m)
    for (double x : {0.0, 1.0, 2.0})
      for (double t : {0.5, 1.0}) {
        const Cx closed = i_m_closed({m, x, t, 0.0});
        const double scale = 1.7724538 * std::pow(std::abs(t), -(m + 1) / 2.0);
        if (std::abs(closed) < 1e-12 * scale) {
          // parity zero: integral vanishes identically on both routes
          const Cx v = i_m_quadrature({m, x, t, 1e-4}, q).value;
          worst_limit = std::max(worst_limit, std::abs(v) / scale);
          continue;
        }
        double prev_gap = 1e300;
        Cx q3, q4;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
          const Cx v = i_m_quadrature({m, x, t, eps}, q).value;
          const double gap = std::abs(v - closed);
          if (gap > prev_gap) ++monotone_violations;
          prev_gap = gap;
          if (eps == 1e-3) q3 = v;
          if (eps == 1e-4) q4 = v;
        }
        worst_raw = std::max(worst_raw, prev_gap / std::abs(closed));
        const Cx extrap = (10.0 * q4 - q3) / 9.0;  // eps -> 0 limit of the ladder
        worst_limit = std::max(worst_limit, std::abs(extrap - closed) / std::abs(closed));
      }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "limit gap %.3e (tol 1e-4), ladder monotone violations %d, raw eps=1e-4 bias %.3e",
                worst_limit, monotone_violations, worst_raw);
  return {worst_limit <= 1e-4 && monotone_violations == 0, buf};
}

// C6: gaussian_moment vs direct quadrature to 1e-8 on 50 random triples.
Outcome criterion_gaussian_moment() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ua(0.3, 2.5), uim(-2.0, 2.0), ub(-3.0, 3.0);
  std::uniform_int_distribution<int> un(0, 6);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Cx a(ua(rng), uim(rng));
    Cx b(ub(rng), ub(rng));
    if (std::abs(b) > 3.0) b *= 3.0 / std::abs(b);
    const int n = un(rng);
    const Cx formula = gaussian_moment(a, b, n);
    const double L = std::abs(b) / a.real() + std::sqrt(70.0 / a.real());
    const Cx numeric = test_support::adaptive_simpson(
        [&](double x) { return pow_int(Cx(x, 0.0), n) * std::exp(-a * x * x + b * x); }, -L, L,
        1e-14 * std::abs(formula));
    worst = std::max(worst, std::abs(formula - numeric) / std::abs(formula));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max relative gap %.3e (tol 1e-8)", worst);
  return {worst <= 1e-8, buf};
}

// C7: orthonormality to 1e-12, reproducing property to 1e-10 at 20 anchors,
// quadrature vs coefficient inner product to 1e-6 for degree <= 6.
Outcome criterion_fock() {
  const auto families = {exponential_family(), mittag_leffler_family(2.0, 1.0)};
  double worst_onb = 0.0, worst_repr = 0.0, worst_quad = 0.0;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const QuadratureConfig q = default_quadrature_config();
  for (const auto& family : families) {
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= 12; ++m) {
        const FockElement en{PowerSeries::monomial(n, std::sqrt(phi_coefficient(family, n))),
                             family};
        const FockElement em{PowerSeries::monomial(m, std::sqrt(phi_coefficient(family, m))),
                             family};
        worst_onb = std::max(worst_onb,
                             std::abs(inner_product(en, em) - (n == m ? 1.0 : 0.0)));
      }
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Cx> coeffs(9);
      for (auto& c : coeffs) c = Cx(u(rng), u(rng));
      const PowerSeries f(coeffs);
      const Cx w(0.8 * u(rng), 0.8 * u(rng));
      const FockElement kw = KernelSection{w, family}.to_element(8);
      worst_repr = std::max(
          worst_repr, std::abs(inner_product(kw, {f, family}) - eval_series(f, w).value));
    }
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Cx> fc(7), gc(7);
      for (auto& c : fc) c = Cx(u(rng), u(rng));
      for (auto& c : gc) c = Cx(u(rng), u(rng));
      const FockElement f{PowerSeries(fc), family}, g{PowerSeries(gc), family};
      const Cx direct = inner_product(f, g);
      worst_quad = std::max(worst_quad,
                            std::abs(direct - quadrature_inner_product(f, g, q)) / std::abs(direct));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "onb %.3e (1e-12), reproducing %.3e (1e-10), quad-ip %.3e (1e-6)",
                worst_onb, worst_repr, worst_quad);
  return {worst_onb <= 1e-12 && worst_repr <= 1e-10 && worst_quad <= 1e-6, buf};
}

// C8: evolution PDE residual <= 1e-3 at n=11, a=2, M=24, h=1e-3; h/2 ratio in
// [3.5, 4.5]. The truncated m-series is dominated by its top mode, whose
// finite-difference truncation alone sits near 7e-3 here, so the 1e-3 leg is
// expected to fail; it is asserted as stated regardless.
Outcome criterion_evolution_residual() {
  const auto sol = EvolutionSolution::build({11, 2.0, exponential_family()}, 24);
  ResidualBox box;  // x in [-2,2], t in [0.5,1]
  const auto r1 = pde_residual(sol, box, 1e-3, 1e-3);
  const auto r2 = pde_residual(sol, box, 0.5e-3, 0.5e-3);
  const double ratio = r1.normalized / r2.normalized;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "normalized residual %.3e (tol 1e-3), h/2 ratio %.2f ([3.5,4.5])",
                r1.normalized, ratio);
  return {r1.normalized <= 1e-3 && ratio >= 3.5 && ratio <= 4.5, buf};
}

// C9: theorem-form and mode-form assemblies agree to 1e-10 at 50 random (x,t).
Outcome criterion_assembly() {
  const auto sol = EvolutionSolution::build({11, 2.0, exponential_family()}, 24);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.25, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng), t = ut(rng);
    const Cx a = psi_eval(sol, x, t).value;
    const Cx b = psi_eval_theorem_form(sol, x, t);
    worst = std::max(worst, std::abs(a - b) / std::abs(a));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max relative gap %.3e (tol 1e-10)", worst);
  return {worst <= 1e-10, buf};
}

// C10: derivative moments: k=1 exact; k=2,3 gaps shrink from n=51 to n=401.
Outcome criterion_derivative_moments() {
  double worst_k1 = 0.0;
  for (int n = 5; n <= 401; n += 28)
    worst_k1 = std::max(worst_k1, std::abs(derivative_moment(n, 2.0, 1) - Cx(0.0, 2.0)));
  bool shrink = true;
  std::string detail;
  for (int k : {2, 3}) {
    const Cx target = pow_int(Cx(0.0, 2.0), k);
    const double g51 = std::abs(derivative_moment(51, 2.0, k) - target);
    const double g401 = std::abs(derivative_moment(401, 2.0, k) - target);
    shrink = shrink && g401 < g51;
    char buf[64];
    std::snprintf(buf, sizeof(buf), " k=%d: %.3e -> %.3e;", k, g51, g401);
    detail += buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), " k=1 gap %.3e (tol 1e-14)", worst_k1);
  detail += buf;
  return {worst_k1 <= 1e-14 && shrink, detail};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"C01 partition-of-unity", criterion_partition},
    {"C02 form-equality", criterion_form_equality},
    {"C03 supershift-convergence-trend", criterion_convergence_trend},
    {"C04 mellin-moment-consistency", criterion_moment_consistency},
    {"C05 oscillatory-closed-form", criterion_oscillatory},
    {"C06 gaussian-moment-formula", criterion_gaussian_moment},
    {"C07 fock-space-identities", criterion_fock},
    {"C08 evolution-pde-residual", criterion_evolution_residual},
    {"C09 assembly-equivalence", criterion_assembly},
    {"C10 derivative-moment-limits", criterion_derivative_moments},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);

  int failures = 0;
  int index = 0;
  for (const auto& criterion : kCriteria) {
    ++index;
    if (only != 0 && only != index) continue;
    Outcome outcome{false, "exception"};
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("%-36s %s  [%s]\n", criterion.name, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
