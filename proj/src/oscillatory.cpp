#include "fracshift/oscillatory.hpp"

#include <cmath>

#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

std::complex<double> hermite_complex(int m, std::complex<double> z) {
  if (m < 0) raise(Errc::invalid_argument, "hermite_complex: m >= 0 required");
  if (m == 0) return 1.0;
  std::complex<double> h_prev = 1.0;
  std::complex<double> h = 2.0 * z;
  for (int k = 1; k < m; ++k) {
    const std::complex<double> next = 2.0 * z * h - 2.0 * static_cast<double>(k) * h_prev;
    h_prev = h;
    h = next;
  }
  return h;
}

std::complex<double> parabolic_cylinder(int m, std::complex<double> z) {
  if (m < 0) raise(Errc::invalid_argument, "parabolic_cylinder: m >= 0 required");
  return std::pow(2.0, -0.5 * m) * std::exp(-z * z / 4.0) *
         hermite_complex(m, z / std::sqrt(2.0));
}

std::complex<double> gaussian_moment(std::complex<double> a, std::complex<double> b, int n) {
  if (n < 0) raise(Errc::invalid_argument, "gaussian_moment: n >= 0 required");
  if (!(a.real() > 0.0))
    raise(Errc::domain, "gaussian_moment: hypothesis Re(a) > 0 violated; use the it+eps path");
  const std::complex<double> sqrt_a = std::sqrt(a);
  return std::sqrt(kPi / a) * std::exp(b * b / (4.0 * a)) *
         pow_int(std::complex<double>(0.0, -1.0), n) * pow_int(0.5 / sqrt_a, n) *
         hermite_complex(n, std::complex<double>(0.0, 1.0) * b / (2.0 * sqrt_a));
}

std::complex<double> i_m_closed(const OscillatoryParams& p) {
  if (p.t == 0.0) raise(Errc::time_singularity, "i_m_closed: t = 0 is singular");
  if (p.m < 0) raise(Errc::invalid_argument, "i_m_closed: m >= 0 required");
  const std::complex<double> it(0.0, p.t);
  const std::complex<double> prefactor =
      pow_int(std::complex<double>(0.0, 1.0), -p.m) * std::pow(2.0, -p.m) * kSqrtPi *
      cpow(it, -(p.m + 1) / 2.0);
  return prefactor * std::exp(-p.x * p.x / (4.0 * it)) *
         hermite_complex(p.m, -p.x / (2.0 * std::sqrt(it)));
}

OscillatoryQuadrature i_m_quadrature(const OscillatoryParams& p, const QuadratureConfig& config) {
  config.validate();
  if (!(p.epsilon > 0.0))
    raise(Errc::invalid_argument, "i_m_quadrature: epsilon > 0 required for the regularized path");
  if (p.m < 0) raise(Errc::invalid_argument, "i_m_quadrature: m >= 0 required");
  const double eps = p.epsilon;
  const double L = std::sqrt(std::max(40.0, p.m * std::log(10.0)) / eps);

  // envelope |lambda|^m e^{-eps lambda^2}: tail beyond L
  const double env = std::pow(L, p.m) * std::exp(-eps * L * L);
  const double decay = 2.0 * eps * L - p.m / L;
  if (decay <= 0.0)
    raise(Errc::quadrature_tolerance, "i_m_quadrature: cutoff insufficient for the envelope");
  const double tail = 2.0 * env / decay;

  // panel width capped so the fastest local phase 2|t|L + |x| advances at most
  // ~4 pi per 16-node panel
  const double max_freq = 2.0 * std::abs(p.t) * L + std::abs(p.x);
  const long min_panels = std::max<long>(config.nodes / 16, 4);
  const long panels =
      std::max(min_panels, static_cast<long>(std::ceil(max_freq * 2.0 * L / (4.0 * kPi))));

  const GaussLegendre& rule = gauss_legendre(16);
  const std::complex<double> coef(-eps, -p.t);  // -(it + eps)
  KahanComplex acc;
  const double width = 2.0 * L / static_cast<double>(panels);
  for (long i = 0; i < panels; ++i) {
    const double lo = -L + width * static_cast<double>(i);
    const double mid = lo + 0.5 * width, half = 0.5 * width;
    std::complex<double> panel = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double lam = mid + half * rule.nodes[k];
      panel += half * rule.weights[k] * std::pow(lam, p.m) *
               std::exp(coef * lam * lam + std::complex<double>(0.0, lam * p.x));
    }
    acc += panel;
  }

  OscillatoryQuadrature out;
  out.value = acc.value();
  out.tail_bound = tail;
  out.panels = panels;
  const double scale = std::max(std::abs(out.value), std::pow(eps, -(p.m + 1) / 2.0) * 1e-10);
  if (tail > config.rel_tol * scale)
    raise(Errc::quadrature_tolerance,
          "i_m_quadrature: tail bound " + std::to_string(tail) + " exceeds tolerance");
  return out;
}

}  // namespace fracshift
