#include "fracshift/power_series.hpp"

#include <cmath>

#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"
#include "fracshift/weights.hpp"

namespace fracshift {

PowerSeries::PowerSeries(std::vector<std::complex<double>> coeffs, double radius_hint)
    : coeffs_(std::move(coeffs)), radius_hint_(radius_hint) {
  if (coeffs_.empty()) raise(Errc::invalid_argument, "PowerSeries: needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      raise(Errc::invalid_argument, "PowerSeries: coefficients must be finite");
  }
  if (std::isfinite(radius_hint_) && !(radius_hint_ > 0.0))
    raise(Errc::invalid_argument, "PowerSeries: finite radius_hint must be positive");
}

PowerSeries PowerSeries::monomial(int k, std::complex<double> a) {
  std::vector<std::complex<double>> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = a;
  return PowerSeries(std::move(c));
}

SeriesValue eval_series(const PowerSeries& f, std::complex<double> z) {
  SeriesValue out;
  out.out_of_radius = std::isfinite(f.radius_hint()) && std::abs(z) >= f.radius_hint();
  const auto& a = f.coeffs();
  const int n = f.truncation_order();
  if (n <= 32) {
    std::complex<double> acc = a[static_cast<std::size_t>(n)];
    for (int k = n - 1; k >= 0; --k) acc = acc * z + a[static_cast<std::size_t>(k)];
    out.value = acc;
    return out;
  }
  KahanComplex acc;
  std::complex<double> zk = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += a[static_cast<std::size_t>(k)] * zk;
    zk *= z;
  }
  out.value = acc.value();
  return out;
}

PowerSeries gl_derivative(const PowerSeries& f, const WeightFamily& family) {
  const int n = f.truncation_order();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(std::max(n, 1)), 0.0);
  double phi_prev = phi_coefficient(family, 0);
  for (int k = 1; k <= n; ++k) {
    const double phi_k = phi_coefficient(family, k);
    if (!(phi_prev > 0.0) || !(phi_k > 0.0))
      raise(Errc::invalid_family, "gl_derivative: family coefficients must be positive");
    out[static_cast<std::size_t>(k - 1)] = f.coeff(k) * (phi_prev / phi_k);
    phi_prev = phi_k;
  }
  if (n == 0) out.assign(1, 0.0);  // derivative of a constant
  return PowerSeries(std::move(out), f.radius_hint());
}

namespace {

// Solve x (ln x - 1) = d for x >= e; the Stirling-level inverse of
// log Gamma growth. d <= 0 maps to x = e.
double stirling_inverse(double d) {
  const double e = 2.718281828459045;
  if (d <= 0.0) return e;
  double x = std::max(e * 1.0001, d / std::max(std::log(std::max(d, 2.0)), 1.0));
  for (int i = 0; i < 80; ++i) {
    const double f = x * (std::log(x) - 1.0) - d;
    const double step = f / std::log(x);
    x -= step;
    if (x < e) x = e * (1.0 + 1e-12);
    if (std::abs(step) < 1e-13 * x) break;
  }
  return x;
}

}  // namespace

OrderEstimate order_estimate(const PowerSeries& phi) {
  const int n = phi.truncation_order();
  const int window = (n + 2) / 3;  // ceil(N/3)
  const int k_begin = n - window + 1;
  if (k_begin < 1 || window < 10)
    raise(Errc::insufficient_data, "order_estimate: need at least 10 tail coefficients");
  double sup = 0.0, lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int k = k_begin; k <= n; ++k) {
    const auto c = phi.coeff(k);
    if (c.imag() != 0.0 || !(c.real() > 0.0))
      raise(Errc::insufficient_data, "order_estimate: tail coefficients must be positive reals");
    const double d = -std::log(c.real());
    const double rho_k = k / stirling_inverse(d);
    sup = std::max(sup, rho_k);
    lo = std::min(lo, rho_k);
    hi = std::max(hi, rho_k);
  }
  OrderEstimate est;
  est.rho = sup;
  est.k_begin = k_begin;
  est.k_end = n;
  est.stabilized = (hi / lo - 1.0) <= 0.05;
  return est;
}

}  // namespace fracshift
