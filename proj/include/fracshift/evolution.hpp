#pragma once

#include <complex>
#include <vector>

#include "fracshift/oscillatory.hpp"
#include "fracshift/supershift.hpp"

namespace fracshift {

/// Resolution switches for constants that have a literal variant alongside the
/// oracle-validated one; the CLI exposes both for comparison runs.
struct EvolutionConventions {
  bool exponent_half = true;   // (it)^{-(m+1)/2} (true) vs (it)^{-m-1}
  bool prefactor_pow_m = true; // 2^{-m} (true) vs 2^{-2}
};

/// c_n(m) = sum_{j=0}^{n} C_j z_j^{1-m}; m >= 2 requires every node nonzero
/// (odd n), otherwise the j = n/2 node is singular.
std::complex<double> moment_coefficient(const SupershiftSpec& spec, int m);

/// b_m(t) = (sqrt(pi)/m!) (1/phi_{m+1}) 2^{-m} (it)^{-(m+1)/2} c_n(m).
std::complex<double> b_coefficient(const SupershiftSpec& spec, int m, double t,
                                   const EvolutionConventions& conv = {});

/// Truncated series solution of the free evolution with the supershift
/// initial datum. The m-series is formal: no convergence is claimed; the
/// per-evaluation tail diagnostic reports the weight of the last mode.
class EvolutionSolution {
 public:
  static EvolutionSolution build(const SupershiftSpec& spec, int truncation,
                                 const EvolutionConventions& conv = {});
  /// Direct construction from initial-datum coefficients C over nodes
  /// z_j = -i lambda_j (linearity tests, custom data).
  static EvolutionSolution from_initial_coefficients(std::vector<double> C,
                                                     std::vector<double> lambda,
                                                     const WeightFamily& family, int truncation,
                                                     const EvolutionConventions& conv = {});
  /// Direct construction from explicit c(m) values (mode selection).
  static EvolutionSolution from_moment_coefficients(std::vector<std::complex<double>> c,
                                                    const WeightFamily& family,
                                                    const EvolutionConventions& conv = {});

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::complex<double>>& moment_coefficients() const { return c_; }
  const WeightFamily& family() const { return family_; }
  const EvolutionConventions& conventions() const { return conv_; }

 private:
  WeightFamily family_;
  std::vector<std::complex<double>> c_;
  EvolutionConventions conv_;
};

struct PsiValue {
  std::complex<double> value;
  double tail_ratio = 0.0;        // |last mode| / |sum|
  bool truncation_warning = false;
};

/// psi(x,t) assembled mode-by-mode from i_m_closed:
/// (1/sqrt(2 pi)) sum_m (i^m/m!) (1/phi_{m+1}) c_n(m) I_m(x, t).
PsiValue psi_eval(const EvolutionSolution& sol, double x, double t, double rel_tol = 1e-6);

/// The same sum assembled through b_m exp(-x^2/(4it)) H_m(-x/(2 sqrt(it)));
/// algebraically identical, used as the internal cross-check.
std::complex<double> psi_eval_theorem_form(const EvolutionSolution& sol, double x, double t);

struct ResidualBox {
  double x0 = -2.0, x1 = 2.0;
  double t0 = 0.5, t1 = 1.0;
  int nx = 17, nt = 9;
};

struct ResidualReport {
  double normalized = 0.0;   // max |i D_t psi + D_xx psi| / max |psi|
  double max_abs_psi = 0.0;
  double max_raw = 0.0;
};

/// Central-difference free-equation residual over the box; t must stay at
/// least 10 h_t away from 0.
ResidualReport pde_residual(const EvolutionSolution& sol, const ResidualBox& box, double h_t,
                            double h_x);

struct HatCValue {
  std::complex<double> value;
  bool converged = false;  // tail term ratios contracting
};

/// Partial sum of sum_m (i lambda)^m/m! (1/phi_{m+1}) c_n(m); formal outside
/// |lambda| < min_j |z_j|, reported through the flag.
HatCValue hat_c_eval(const SupershiftSpec& spec, double lambda, int truncation);

}  // namespace fracshift
