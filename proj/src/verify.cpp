#include "fracshift/verify.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/evolution.hpp"
#include "fracshift/fock.hpp"
#include "fracshift/oscillatory.hpp"
#include "fracshift/supershift.hpp"
#include "fracshift/weights.hpp"

namespace fracshift {

namespace {

using Cx = std::complex<double>;

void push(std::vector<CheckResult>& out, const std::string& name, double measured,
          double tolerance) {
  out.push_back({name, measured, tolerance, measured <= tolerance});
}

std::vector<CheckResult> suite_im(double) {
  std::vector<CheckResult> out;

  {  // recurrence vs explicit polynomials at random complex points
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto explicit_h = [](int m, Cx z) -> Cx {
      switch (m) {
        case 0: return 1.0;
        case 1: return 2.0 * z;
        case 2: return 4.0 * z * z - 2.0;
        case 3: return 8.0 * z * z * z - 12.0 * z;
        case 4: return 16.0 * pow_int(z, 4) - 48.0 * z * z + 12.0;
        case 5: return 32.0 * pow_int(z, 5) - 160.0 * pow_int(z, 3) + 120.0 * z;
        default:
          return 64.0 * pow_int(z, 6) - 480.0 * pow_int(z, 4) + 720.0 * z * z - 120.0;
      }
    };
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Cx z(u(rng), u(rng));
      for (int m = 0; m <= 6; ++m) {
        const Cx a = hermite_complex(m, z), b = explicit_h(m, z);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    }
    push(out, "im.hermite_recurrence_vs_explicit", worst, 1e-12);
  }

  {  // parity I_m(-x) = (-1)^m I_m(x)
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
      for (double x : {0.7, 1.3})
        for (double t : {0.5, 1.0}) {
          const Cx a = i_m_closed({m, -x, t, 0.0});
          const Cx b = std::pow(-1.0, m) * i_m_closed({m, x, t, 0.0});
          worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    push(out, "im.parity", worst, 1e-12);
  }

  {  // gaussian_moment(a,0,n): Gamma((n+1)/2) a^{-(n+1)/2} even, 0 odd
    double worst = 0.0;
    for (double a : {0.7, 1.3, 2.0})
      for (int n = 0; n <= 8; ++n) {
        const Cx g = gaussian_moment(a, 0.0, n);
        if (n % 2 == 1) {
          worst = std::max(worst, std::abs(g));
        } else {
          const double expected = gamma_real((n + 1) / 2.0) * std::pow(a, -(n + 1) / 2.0);
          worst = std::max(worst, std::abs(g - expected) / expected);
        }
      }
    push(out, "im.moment_reduction", worst, 1e-10);
  }

  {  // closed form vs the eps->0 limit of the regularized quadrature
    QuadratureConfig q;
    q.rel_tol = 1e-4;
    double worst_extrap = 0.0;
    int monotone_violations = 0;
    for (int m = 0; m <= 2; ++m)
      for (double x : {0.0, 1.0})
        for (double t : {0.5, 1.0}) {
          const Cx closed = i_m_closed({m, x, t, 0.0});
          const double scale = 1.7724 * std::pow(std::abs(t), -(m + 1) / 2.0);
          if (std::abs(closed) < 1e-12 * scale) {
            // parity zero (odd m at x = 0): both sides vanish; check absolutely
            const Cx v = i_m_quadrature({m, x, t, 1e-4}, q).value;
            worst_extrap = std::max(worst_extrap, std::abs(v) / scale);
            continue;
          }
          Cx q3, q4;
          double prev_gap = 1e300;
          for (double eps : {1e-2, 1e-3, 1e-4}) {
            const Cx v = i_m_quadrature({m, x, t, eps}, q).value;
            const double gap = std::abs(v - closed);
            if (gap > prev_gap * (1.0 + 1e-9)) ++monotone_violations;
            prev_gap = gap;
            if (eps == 1e-3) q3 = v;
            if (eps == 1e-4) q4 = v;
          }
          const Cx extrap = (10.0 * q4 - q3) / 9.0;
          worst_extrap = std::max(worst_extrap, std::abs(extrap - closed) / std::abs(closed));
        }
    push(out, "im.eps_ladder_monotone_violations", monotone_violations, 0.0);
    push(out, "im.closed_vs_quadrature_limit", worst_extrap, 1e-4);
  }

  {  // formula vs direct quadrature for proper Re(a) > 0 moments
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ua(0.4, 2.0), ub(-1.5, 1.5);
    std::uniform_int_distribution<int> un(0, 6);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Cx a(ua(rng), ub(rng));
      const Cx b(ub(rng), ub(rng));
      const int n = un(rng);
      const Cx formula = gaussian_moment(a, b, n);
      const double L = std::abs(b) / a.real() + std::sqrt(60.0 / a.real());
      const Cx numeric = gl_integrate_complex(
          [&](double x) { return pow_int(Cx(x, 0.0), n) * std::exp(-a * x * x + b * x); }, -L, L,
          2000);
      worst = std::max(worst, std::abs(formula - numeric) / std::abs(formula));
    }
    push(out, "im.gaussian_moment_vs_quadrature", worst, 1e-8);
  }

  return out;
}

std::vector<CheckResult> suite_mellin(double rel_tol) {
  std::vector<CheckResult> out;
  QuadratureConfig q;
  q.rel_tol = std::min(rel_tol, 1e-6);
  for (const auto& family :
       {exponential_family(), mittag_leffler_family(2.0, 1.0), gamma_shifted_family()}) {
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      const double product = mellin_moment(family, n, q) * phi_coefficient(family, n);
      worst = std::max(worst, std::abs(product / family.normalization - 1.0));
    }
    push(out, "mellin.moment_consistency." + family.name, worst, 1e-6);
  }
  {
    int violations = 0;
    if (!carleman_diagnostic(exponential_family(), 50).diverging) ++violations;
    if (!carleman_diagnostic(mittag_leffler_family(2.0, 1.0), 50).diverging) ++violations;
    push(out, "mellin.carleman_divergence_flags", violations, 0.0);
  }
  {
    // sampled on the ray where the Taylor identity is well conditioned
    // (alternating arguments cost e^{2|z|} in double, see ledger)
    double worst = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.625) {
      const Cx ml = mittag_leffler_eval(1.0, 1.0, Cx(x, 0.0));
      worst = std::max(worst, std::abs(ml - std::exp(x)) / std::exp(x));
    }
    push(out, "mellin.ml_exponential_reduction", worst, 1e-12);
  }
  return out;
}

std::vector<CheckResult> suite_fock(double) {
  std::vector<CheckResult> out;
  const auto families = {exponential_family(), mittag_leffler_family(2.0, 1.0)};

  {  // <e_n, e_m> = delta_{nm}
    double worst = 0.0;
    for (const auto& family : families) {
      for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m) {
          const auto en = PowerSeries::monomial(n, std::sqrt(phi_coefficient(family, n)));
          const auto em = PowerSeries::monomial(m, std::sqrt(phi_coefficient(family, m)));
          const Cx ip = inner_product({en, family}, {em, family});
          worst = std::max(worst, std::abs(ip - (n == m ? 1.0 : 0.0)));
        }
    }
    push(out, "fock.onb_orthonormality", worst, 1e-12);
  }

  {  // reproducing property at random anchors, random degree-8 polynomials
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (const auto& family : families) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Cx> coeffs(9);
        for (auto& c : coeffs) c = Cx(u(rng), u(rng));
        const PowerSeries f(coeffs);
        const Cx w(0.8 * u(rng), 0.8 * u(rng));
        const FockElement kernel_section = KernelSection{w, family}.to_element(8);
        const Cx reproduced = inner_product(kernel_section, {f, family});
        worst = std::max(worst, std::abs(reproduced - eval_series(f, w).value));
      }
    }
    push(out, "fock.reproducing_property", worst, 1e-10);
  }

  {  // Gram positivity via LDL^H pivots
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    double worst = 0.0;
    for (const auto& family : families) {
      constexpr int kAnchors = 6;
      std::vector<Cx> w(kAnchors);
      for (auto& wi : w) wi = Cx(u(rng), u(rng));
      Cx a[kAnchors][kAnchors];
      double trace = 0.0;
      for (int i = 0; i < kAnchors; ++i)
        for (int j = 0; j < kAnchors; ++j) {
          a[i][j] = kernel_eval(family, w[static_cast<std::size_t>(i)],
                                w[static_cast<std::size_t>(j)])
                        .value;
          if (i == j) trace += a[i][j].real();
        }
      double min_pivot = 0.0;
      for (int k = 0; k < kAnchors; ++k) {
        min_pivot = std::min(min_pivot, a[k][k].real());
        if (a[k][k].real() <= 0.0) break;
        for (int i = k + 1; i < kAnchors; ++i)
          for (int j = k + 1; j < kAnchors; ++j)
            a[i][j] -= a[i][k] * std::conj(a[j][k]) / a[k][k].real();
      }
      worst = std::max(worst, -min_pivot / trace);
    }
    push(out, "fock.gram_positivity", worst, 1e-10);
  }

  {  // Parseval at truncation
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (const auto& family : families) {
      std::vector<Cx> coeffs(11);
      for (auto& c : coeffs) c = Cx(u(rng), u(rng));
      const PowerSeries f(coeffs);
      const Cx norm2 = inner_product({f, family}, {f, family});
      double sum = 0.0;
      for (int n = 0; n <= 10; ++n) {
        const auto en = PowerSeries::monomial(n, std::sqrt(phi_coefficient(family, n)));
        sum += std::norm(inner_product({f, family}, {en, family}));
      }
      worst = std::max(worst, std::abs(sum - norm2.real()) / norm2.real());
    }
    push(out, "fock.parseval", worst, 1e-12);
  }

  {  // kernel expansion kernel(z,w) = sum e_n(z) conj(e_n(w))
    double worst = 0.0;
    for (const auto& family : families) {
      const Cx z(0.4, -0.3), w(0.2, 0.5);
      Cx sum = 0.0;
      for (int n = 0; n <= family.max_index / 2; ++n) {
        const double phi_n = phi_coefficient(family, n);
        sum += phi_n * pow_int(z, n) * std::conj(pow_int(w, n));
      }
      worst = std::max(worst, std::abs(sum - kernel_eval(family, z, w).value));
    }
    push(out, "fock.kernel_expansion", worst, 1e-12);
  }

  {  // quadrature inner product vs coefficient inner product
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    QuadratureConfig q;
    double worst = 0.0;
    for (const auto& family : families) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Cx> fc(7), gc(7);
        for (auto& c : fc) c = Cx(u(rng), u(rng));
        for (auto& c : gc) c = Cx(u(rng), u(rng));
        const FockElement f{PowerSeries(fc), family}, g{PowerSeries(gc), family};
        const Cx direct = inner_product(f, g);
        const Cx numeric = quadrature_inner_product(f, g, q);
        worst = std::max(worst, std::abs(direct - numeric) / std::abs(direct));
      }
    }
    push(out, "fock.quadrature_vs_coefficient_ip", worst, 1e-6);
  }

  return out;
}

std::vector<CheckResult> suite_supershift(double) {
  std::vector<CheckResult> out;

  {  // partition of unity across the (n, a) panel
    double worst_ratio = 0.0;
    for (int n = 5; n <= 199; n += 2)
      for (double a : {1.0, 1.5, 2.0, 4.0}) {
        const auto set = coefficients(n, a);
        worst_ratio = std::max(worst_ratio, set.partition_defect / (n * std::pow(2.0, -50)));
      }
    push(out, "supershift.partition_of_unity_ratio", worst_ratio, 1.0);
  }

  {  // product form vs plane-wave sum form
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> un(1, 30);
    std::uniform_real_distribution<double> ua(1.0, 4.0), uz(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int n = un(rng);
      const double a = ua(rng);
      Cx z(uz(rng), uz(rng));
      if (std::abs(z) > 3.0) z *= 3.0 / std::abs(z);
      const Cx p = classical_F(n, a, z, ClassicalForm::product);
      const Cx s = classical_F(n, a, z, ClassicalForm::sum);
      worst = std::max(worst, std::abs(p - s) / std::abs(p));
    }
    push(out, "supershift.form_equality", worst, 1e-9);
  }

  {  // conjugation symmetry on the real line
    double worst = 0.0;
    for (int n : {7, 20})
      for (double a : {1.5, 3.0})
        for (double t : {0.3, 1.7}) {
          const Cx lhs = classical_F(n, a, -t, ClassicalForm::product);
          const Cx rhs = std::conj(classical_F(n, a, t, ClassicalForm::product));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    push(out, "supershift.conjugation_symmetry", worst, 1e-13);
  }

  {  // supershift error decreasing along the ladder
    std::vector<Cx> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(Cx(-1.0 + 0.1 * i, 0.0));
    int violations = 0;
    double prev = 1e300;
    for (int n : {21, 81, 321}) {
      const double err = supershift_error({n, 2.0, exponential_family()}, grid);
      if (err >= prev) ++violations;
      prev = err;
    }
    push(out, "supershift.convergence_trend_exp", violations, 0.0);
  }

  {  // first derivative moment is exact
    double worst = 0.0;
    for (int n : {5, 32, 201})
      for (double a : {1.5, 2.0}) {
        const Cx v = derivative_moment(n, a, 1);
        worst = std::max(worst, std::abs(v - Cx(0.0, a)));
      }
    push(out, "supershift.derivative_moment_k1_exact", worst, 1e-14);
  }

  {  // a = 1 exactness: F reduces to K(iz)
    double worst = 0.0;
    for (const auto& family : {exponential_family(), mittag_leffler_family(2.0, 1.0)}) {
      for (double x : {-0.7, 0.4}) {
        const Cx z(x, 0.1);
        const Cx f = fractional_F({9, 1.0, family}, z);
        const Cx k = weight_eval(family, Cx(0.0, 1.0) * z);
        worst = std::max(worst, std::abs(f - k));
      }
    }
    push(out, "supershift.a1_exactness", worst, 1e-14);
  }

  return out;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite, double rel_tol) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "im") {
    auto r = suite_im(rel_tol);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "mellin") {
    auto r = suite_mellin(rel_tol);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "fock") {
    auto r = suite_fock(rel_tol);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "supershift") {
    auto r = suite_supershift(rel_tol);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty())
    raise(Errc::usage, "verify: unknown suite '" + suite + "' (im|mellin|fock|supershift|all)");
  return out;
}

}  // namespace fracshift
