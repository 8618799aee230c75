#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fracshift {

/// Shared configuration for all quadrature-based oracles.
struct QuadratureConfig {
  double cutoff = 80.0;   // domain truncation L
  int nodes = 256;        // minimum total node budget
  double epsilon = 0.0;   // regularization (oscillatory integrals)
  double rel_tol = 1e-6;

  void validate() const;
};

/// Default config; rel_tol can be overridden by the FRACSHIFT_TOL environment
/// variable (used by the CLI when constructing configs).
QuadratureConfig default_quadrature_config();

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per node count.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

/// Integrate f over [a, b] with an n-node Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);
std::complex<double> gl_integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, int n);

}  // namespace fracshift
