#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracshift/weights.hpp"

namespace fracshift {

struct SupershiftSpec {
  int n = 1;       // sequence order, >= 1
  double a = 1.0;  // shift target, >= 1
  WeightFamily family;

  void validate() const;
};

/// Binomial superposition data: C_j = C(n,j) ((1+a)/2)^{n-j} ((1-a)/2)^j,
/// lambda_j = 1 - 2j/n, nodes z_j = -i lambda_j.
struct CoefficientSet {
  std::vector<double> C;
  std::vector<std::complex<double>> Z;
  std::vector<double> lambda;
  /// |sum_j C_j - 1| evaluated in the construction arithmetic (extended
  /// precision once n*log2(a) exceeds the double budget). The sum of the
  /// rounded doubles is reported separately since per-coefficient rounding
  /// alone costs ~a^n * 2^-53.
  double partition_defect = 0.0;
  double partition_defect_double = 0.0;
};

CoefficientSet coefficients(int n, double a);

enum class ClassicalForm { product, sum };

/// F_n(z, a): product form [cos(z/n) + i a sin(z/n)]^n or the plane-wave sum
/// sum_j C_j e^{i lambda_j z}. The two agree identically; the sum is evaluated
/// in extended precision once the binomial cancellation exceeds double range.
std::complex<double> classical_F(int n, double a, std::complex<double> z, ClassicalForm form);

/// F_{n,phi}(z, a) = sum_j C_j K_phi(-z_j z).
std::complex<double> fractional_F(const SupershiftSpec& spec, std::complex<double> z);

/// Kernel-variant diagnostic: sum_j C_j phi(z conj(z_j)) truncated like
/// kernel_eval.
std::complex<double> kernel_supershift(const SupershiftSpec& spec, std::complex<double> z);

/// sup over the grid of |F_{n,phi}(z) - K_phi(i a z)|. The limit target
/// K_phi(iaz) must be in-domain: |z| < domain_radius / a.
double supershift_error(const SupershiftSpec& spec, std::span<const std::complex<double>> grid);

/// sum_j C_j (i lambda_j)^k = F_n^{(k)}(0, a); exact-to-rounding at k <= 1.
std::complex<double> derivative_moment(int n, double a, int k);

namespace detail {
/// Largest binomial magnitude ln(max_j |C_j|); overflow pre-check.
double log_max_coefficient(int n, double a);
/// Extended precision needed for a superposition sum whose per-term factors
/// can add growth_log2 bits of magnitude; 0 means double suffices.
unsigned superposition_bits(int n, double a, double growth_log2);
}  // namespace detail

}  // namespace fracshift
