#include "fracshift/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>

#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

void QuadratureConfig::validate() const {
  if (nodes < 16) raise(Errc::invalid_argument, "QuadratureConfig: nodes must be >= 16");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
    raise(Errc::invalid_argument, "QuadratureConfig: rel_tol must lie in (0, 1e-2]");
  if (!(cutoff > 0.0)) raise(Errc::invalid_argument, "QuadratureConfig: cutoff must be positive");
  if (epsilon < 0.0) raise(Errc::invalid_argument, "QuadratureConfig: epsilon must be >= 0");
}

QuadratureConfig default_quadrature_config() {
  QuadratureConfig q;
  if (const char* env = std::getenv("FRACSHIFT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && v <= 1e-2) q.rel_tol = v;
  }
  return q;
}

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.14159265358979323846;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanReal acc;
  for (int i = 0; i < n; ++i) acc += half * rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc.value();
}

std::complex<double> gl_integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, int n) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanComplex acc;
  for (int i = 0; i < n; ++i) acc += half * rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc.value();
}

}  // namespace fracshift
