#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracshift/power_series.hpp"
#include "fracshift/quadrature.hpp"
#include "fracshift/weights.hpp"

namespace fracshift {

/// An element of the weighted entire-function space: a truncated series
/// together with the family whose phi_n define the norm.
struct FockElement {
  PowerSeries series;
  WeightFamily family;
};

/// Kernel section k_w(z) = phi(z conj(w)) as a coefficient vector
/// (k_w)_n = phi_n conj(w)^n.
struct KernelSection {
  std::complex<double> w;
  WeightFamily family;

  FockElement to_element(int order) const;
};

/// sum_n conj(f_n) g_n / phi_n over the aligned truncation; conjugate-linear
/// in the first slot.
std::complex<double> inner_product(const FockElement& f, const FockElement& g);

struct KernelValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

/// Truncated kernel phi(z conj(w)) = sum phi_n (z conj(w))^n with a geometric
/// tail bound; out_of_envelope once the term ratio stops contracting.
KernelValue kernel_eval(const WeightFamily& family, std::complex<double> z,
                        std::complex<double> w);

/// Quadrature oracle for the inner product: radial-angular integration of
/// (1/(pi*normalization)) * integral conj(f) g K(-|z|^2) dx dy. The angular
/// integral is exact for polynomial arguments; the radial factor reuses the
/// Mellin moment quadrature. Polynomials up to degree 10 only (oracle scale).
std::complex<double> quadrature_inner_product(const FockElement& f, const FockElement& g,
                                              const QuadratureConfig& config);

enum class Ladder { raise_op, lower_op };

/// Ladder action on basis coefficients: raise maps unit n-1 to
/// sqrt(phi_{n-1}/phi_n) at n; lower maps unit n to the same factor at n-1.
std::vector<std::complex<double>> ladder_apply(Ladder direction,
                                               std::span<const std::complex<double>> coeffs,
                                               const WeightFamily& family);

/// Coefficient-level intertwining test of the transform h_n -> e_n:
/// max deviation between (map then gl_derivative) and (lower then map), and
/// between (map then multiply-by-z) and (raise then map).
double intertwining_check(const WeightFamily& family, std::span<const std::complex<double>> coeffs,
                          int order);

}  // namespace fracshift
