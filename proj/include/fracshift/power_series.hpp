#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace fracshift {

struct WeightFamily;

/// Truncated complex power series sum_{k=0}^{N} a_k z^k.
/// Immutable after construction; all operations on it are pure.
class PowerSeries {
 public:
  PowerSeries(std::vector<std::complex<double>> coeffs,
              double radius_hint = std::numeric_limits<double>::infinity());

  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  std::complex<double> coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  double radius_hint() const { return radius_hint_; }

  static PowerSeries monomial(int k, std::complex<double> a = 1.0);

 private:
  std::vector<std::complex<double>> coeffs_;
  double radius_hint_;
};

struct SeriesValue {
  std::complex<double> value;
  bool out_of_radius = false;  // |z| >= radius_hint (finite radius only)
};

/// Evaluates sum a_k z^k. Horner for short series; compensated term summation
/// past N = 32, where supershift-style coefficients cancel catastrophically.
SeriesValue eval_series(const PowerSeries& f, std::complex<double> z);

/// Generalized differentiation: coefficient k-1 of the output is
/// a_k * phi_{k-1}/phi_k. Output truncation drops by one.
PowerSeries gl_derivative(const PowerSeries& f, const WeightFamily& family);

struct OrderEstimate {
  double rho = 0.0;      // sup of the per-index estimates over the tail window
  int k_begin = 0;       // tail window used (last ceil(N/3) indices)
  int k_end = 0;
  bool stabilized = false;  // window estimates agree within 5%
};

/// Finite-N growth-order estimate for an entire-series coefficient sequence
/// phi_k > 0. Based on the defining limit rho = lim k log k / log(1/phi_k),
/// inverted through Stirling (solve x(ln x - 1) = log(1/phi_k), rho_k = k/x)
/// so that the estimate settles at moderate N.
OrderEstimate order_estimate(const PowerSeries& phi);

}  // namespace fracshift
