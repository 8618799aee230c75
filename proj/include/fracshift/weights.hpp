#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "fracshift/mp_complex.hpp"
#include "fracshift/power_series.hpp"
#include "fracshift/quadrature.hpp"

namespace fracshift {

/// A weight family ties together the comparison-function coefficients phi_n
/// and the plane weight K_phi through the Mellin-moment relation
///   phi_n * integral_0^inf x^n K_phi(-x) dx = normalization.
///
/// The density g(x) = K_phi(-x) of every built-in family has the shape
/// c * x^alpha * exp(-x^p); the (alpha, p, c) decomposition drives the
/// substitution used by the moment quadrature. Custom families may leave
/// decay_power = 0 and are integrated by the generic split rule.
struct WeightFamily {
  std::string name;
  double domain_radius = std::numeric_limits<double>::infinity();
  double normalization = 1.0;  // moment(n) * phi(n) for every n
  int max_index = 128;         // guaranteed-accuracy range for phi

  std::function<double(int)> phi;  // n -> phi_n > 0
  std::function<std::complex<double>(std::complex<double>)> weight;  // x -> K_phi(x)
  std::function<mp::Complex(const mp::Complex&)> weight_mp;          // optional

  double head_alpha = 0.0;
  double decay_power = 0.0;  // p in exp(-x^p); 0 = unknown shape
  double density_scale = 1.0;
};

WeightFamily exponential_family();
WeightFamily mittag_leffler_family(double rho, double mu);
WeightFamily gamma_shifted_family();

/// Parses the CLI grammar: "exp", "ml:<rho>:<mu>", "gamma-shifted".
WeightFamily parse_family(const std::string& name);

/// phi_n from the family's closed form; index_range error past max_index.
double phi_coefficient(const WeightFamily& family, int n);

/// Truncated comparison function phi(z) = sum phi_k z^k through order n.
PowerSeries phi_series(const WeightFamily& family, int n);

/// K_phi at a complex point (principal branches), domain-checked.
std::complex<double> weight_eval(const WeightFamily& family, std::complex<double> x);

/// Numerical moment integral_0^inf x^n K_phi(-x) dx — the oracle tying the
/// weight back to 1/phi_n. Split quadrature with a tail-truncation estimate;
/// divergent_moment error when the tail does not converge at the cutoff.
double mellin_moment(const WeightFamily& family, int n, const QuadratureConfig& config);

struct CarlemanReport {
  std::vector<double> partial_sums;  // S(k) = sum_{n=1}^{k} phi_n^{-1/(2n)}
  double last_term = 0.0;
  bool diverging = false;  // terms bounded below over the last N/2 indices
};

/// Finite-N divergence heuristic for sum phi_n^{-1/(2n)}; terms are computed
/// in the log domain so large 1/phi_n cannot overflow.
CarlemanReport carleman_diagnostic(const WeightFamily& family, int n_max);

/// E_{1/rho, mu}(z) = sum_k z^k / Gamma(mu + k/rho) by Taylor summation.
/// |z| beyond the validity envelope (50) raises out_of_envelope.
std::complex<double> mittag_leffler_eval(double rho, std::complex<double> mu,
                                         std::complex<double> z);

}  // namespace fracshift
