#include "fracshift/evolution.hpp"

#include <cmath>

#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrtTwoPi = 2.5066282746310005024;

void check_nodes(int n, int m) {
  if (m >= 2 && n % 2 == 0)
    raise(Errc::singular_node, "moment_coefficient: node j=" + std::to_string(n / 2) +
                                   " is zero; z_j^{1-m} singular for m >= 2 (use odd n)");
}

std::complex<double> moment_from(const std::vector<double>& C, const std::vector<double>& lambda,
                                 int m) {
  // c(m) = sum_j C_j z_j^{1-m} with z_j = -i lambda_j:
  //      = (-i)^{1-m} sum_j C_j lambda_j^{1-m}
  KahanReal real_sum;
  for (std::size_t j = 0; j < C.size(); ++j) {
    const double lam = lambda[j];
    if (lam == 0.0) {
      if (m >= 2) raise(Errc::singular_node, "moment: zero node with negative power");
      if (m == 1) real_sum += C[j];  // lambda^0 = 1
      continue;
    }
    real_sum += C[j] * std::pow(lam, 1.0 - m);
  }
  return pow_int(std::complex<double>(0.0, -1.0), 1 - m) * real_sum.value();
}

}  // namespace

std::complex<double> moment_coefficient(const SupershiftSpec& spec, int m) {
  spec.validate();
  if (m < 0) raise(Errc::invalid_argument, "moment_coefficient: m >= 0 required");
  check_nodes(spec.n, m);
  const unsigned bits = detail::superposition_bits(
      spec.n, spec.a, m >= 2 ? (m - 1) * std::log2(static_cast<double>(spec.n)) : 0.0);
  if (bits == 0) {
    const auto set = coefficients(spec.n, spec.a);
    return moment_from(set.C, set.lambda, m);
  }
  mp::PrecisionGuard guard(bits);
  const mp::Real p = (mp::Real(1) + mp::Real(spec.a)) / 2;
  const mp::Real q = (mp::Real(1) - mp::Real(spec.a)) / 2;
  mp::Real c = pow(p, spec.n);
  mp::Real sum = 0;
  for (int j = 0; j <= spec.n; ++j) {
    const mp::Real lam = mp::Real(1) - mp::Real(2 * j) / spec.n;
    if (!(lam == 0)) sum += c * pow(lam, mp::Real(1 - m));
    if (j < spec.n) c = c * (mp::Real(spec.n - j) / mp::Real(j + 1)) * (q / p);
  }
  return pow_int(std::complex<double>(0.0, -1.0), 1 - m) * sum.convert_to<double>();
}

std::complex<double> b_coefficient(const SupershiftSpec& spec, int m, double t,
                                   const EvolutionConventions& conv) {
  if (t == 0.0) raise(Errc::time_singularity, "b_coefficient: t = 0 is singular");
  const std::complex<double> c_m = moment_coefficient(spec, m);
  const double inv_phi = 1.0 / phi_coefficient(spec.family, m + 1);
  const std::complex<double> it(0.0, t);
  const double time_expo = conv.exponent_half ? -(m + 1) / 2.0 : -(m + 1.0);
  const double pref = conv.prefactor_pow_m ? std::pow(2.0, -m) : 0.25;
  return kSqrtPi * std::exp(-lgamma_real(m + 1.0)) * inv_phi * pref * cpow(it, time_expo) * c_m;
}

EvolutionSolution EvolutionSolution::build(const SupershiftSpec& spec, int truncation,
                                           const EvolutionConventions& conv) {
  spec.validate();
  if (truncation < 4) raise(Errc::invalid_argument, "EvolutionSolution: truncation >= 4 required");
  check_nodes(spec.n, truncation);  // fail before computing anything
  EvolutionSolution sol;
  sol.family_ = spec.family;
  sol.conv_ = conv;
  sol.c_.resize(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m)
    sol.c_[static_cast<std::size_t>(m)] = moment_coefficient(spec, m);
  return sol;
}

EvolutionSolution EvolutionSolution::from_initial_coefficients(std::vector<double> C,
                                                               std::vector<double> lambda,
                                                               const WeightFamily& family,
                                                               int truncation,
                                                               const EvolutionConventions& conv) {
  if (C.size() != lambda.size() || C.empty())
    raise(Errc::invalid_argument, "from_initial_coefficients: C and lambda must align");
  if (truncation < 4) raise(Errc::invalid_argument, "EvolutionSolution: truncation >= 4 required");
  EvolutionSolution sol;
  sol.family_ = family;
  sol.conv_ = conv;
  sol.c_.resize(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    bool zero_node = false;
    for (double lam : lambda)
      if (lam == 0.0 && m >= 2) zero_node = true;
    if (zero_node) raise(Errc::singular_node, "from_initial_coefficients: zero node");
    sol.c_[static_cast<std::size_t>(m)] = moment_from(C, lambda, m);
  }
  return sol;
}

EvolutionSolution EvolutionSolution::from_moment_coefficients(std::vector<std::complex<double>> c,
                                                              const WeightFamily& family,
                                                              const EvolutionConventions& conv) {
  if (c.empty()) raise(Errc::invalid_argument, "from_moment_coefficients: empty sequence");
  EvolutionSolution sol;
  sol.family_ = family;
  sol.conv_ = conv;
  sol.c_ = std::move(c);
  return sol;
}

PsiValue psi_eval(const EvolutionSolution& sol, double x, double t, double rel_tol) {
  if (t == 0.0) raise(Errc::time_singularity, "psi_eval: t = 0 is singular");
  const int M = sol.truncation();
  KahanComplex acc;
  std::complex<double> last_term = 0.0;
  for (int m = 0; m <= M; ++m) {
    OscillatoryParams p;
    p.m = m;
    p.x = x;
    p.t = t;
    std::complex<double> i_m;
    if (sol.conventions().exponent_half && sol.conventions().prefactor_pow_m) {
      i_m = i_m_closed(p);
    } else {
      // literal-constant comparison path
      const std::complex<double> it(0.0, t);
      const double expo = sol.conventions().exponent_half ? -(m + 1) / 2.0 : -(m + 1.0);
      const double pref = sol.conventions().prefactor_pow_m ? std::pow(2.0, -m) : 0.25;
      i_m = pow_int(std::complex<double>(0.0, 1.0), -m) * pref * kSqrtPi * cpow(it, expo) *
            std::exp(-x * x / (4.0 * it)) * hermite_complex(m, -x / (2.0 * std::sqrt(it)));
    }
    last_term = pow_int(std::complex<double>(0.0, 1.0), m) * std::exp(-lgamma_real(m + 1.0)) *
                (1.0 / phi_coefficient(sol.family(), m + 1)) *
                sol.moment_coefficients()[static_cast<std::size_t>(m)] * i_m;
    acc += last_term;
  }
  PsiValue out;
  out.value = acc.value() / kSqrtTwoPi;
  const double scale = std::max(std::abs(acc.value()), 1e-300);
  out.tail_ratio = std::abs(last_term) / scale;
  out.truncation_warning = out.tail_ratio > rel_tol;
  return out;
}

std::complex<double> psi_eval_theorem_form(const EvolutionSolution& sol, double x, double t) {
  if (t == 0.0) raise(Errc::time_singularity, "psi_eval_theorem_form: t = 0 is singular");
  const int M = sol.truncation();
  const std::complex<double> it(0.0, t);
  const std::complex<double> gauss = std::exp(-x * x / (4.0 * it));
  const std::complex<double> herm_arg = -x / (2.0 * std::sqrt(it));
  KahanComplex acc;
  for (int m = 0; m <= M; ++m) {
    const double inv_phi = 1.0 / phi_coefficient(sol.family(), m + 1);
    const double time_expo = sol.conventions().exponent_half ? -(m + 1) / 2.0 : -(m + 1.0);
    const double pref = sol.conventions().prefactor_pow_m ? std::pow(2.0, -m) : 0.25;
    const std::complex<double> b_m = kSqrtPi * std::exp(-lgamma_real(m + 1.0)) * inv_phi * pref *
                                     cpow(it, time_expo) *
                                     sol.moment_coefficients()[static_cast<std::size_t>(m)];
    acc += b_m * gauss * hermite_complex(m, herm_arg);
  }
  return acc.value() / kSqrtTwoPi;
}

ResidualReport pde_residual(const EvolutionSolution& sol, const ResidualBox& box, double h_t,
                            double h_x) {
  if (box.t0 < 10.0 * h_t)
    raise(Errc::invalid_argument, "pde_residual: grid must stay >= 10 h_t away from t = 0");
  if (box.nx < 2 || box.nt < 2) raise(Errc::invalid_argument, "pde_residual: grid too small");
  ResidualReport report;
  const std::complex<double> i_unit(0.0, 1.0);
  for (int ix = 0; ix < box.nx; ++ix) {
    const double x = box.x0 + (box.x1 - box.x0) * ix / (box.nx - 1);
    for (int it = 0; it < box.nt; ++it) {
      const double t = box.t0 + (box.t1 - box.t0) * it / (box.nt - 1);
      const std::complex<double> center = psi_eval(sol, x, t).value;
      const std::complex<double> d_t =
          (psi_eval(sol, x, t + h_t).value - psi_eval(sol, x, t - h_t).value) / (2.0 * h_t);
      const std::complex<double> d_xx = (psi_eval(sol, x + h_x, t).value - 2.0 * center +
                                         psi_eval(sol, x - h_x, t).value) /
                                        (h_x * h_x);
      report.max_raw = std::max(report.max_raw, std::abs(i_unit * d_t + d_xx));
      report.max_abs_psi = std::max(report.max_abs_psi, std::abs(center));
    }
  }
  report.normalized = report.max_raw / std::max(report.max_abs_psi, 1e-300);
  return report;
}

HatCValue hat_c_eval(const SupershiftSpec& spec, double lambda, int truncation) {
  spec.validate();
  if (truncation < 4) raise(Errc::invalid_argument, "hat_c_eval: truncation >= 4 required");
  check_nodes(spec.n, truncation);
  KahanComplex acc;
  std::vector<double> mags;
  mags.reserve(static_cast<std::size_t>(truncation) + 1);
  const std::complex<double> i_lambda(0.0, lambda);
  std::complex<double> power = 1.0;
  for (int m = 0; m <= truncation; ++m) {
    const std::complex<double> term = power * std::exp(-lgamma_real(m + 1.0)) *
                                      (1.0 / phi_coefficient(spec.family, m + 1)) *
                                      moment_coefficient(spec, m);
    acc += term;
    mags.push_back(std::abs(term));
    power *= i_lambda;
  }
  HatCValue out;
  out.value = acc.value();
  const std::size_t k = mags.size();
  out.converged = k >= 3 && mags[k - 1] < mags[k - 2] && mags[k - 2] < mags[k - 3];
  return out;
}

}  // namespace fracshift
