#pragma once

#include <complex>

#include "fracshift/quadrature.hpp"

namespace fracshift {

struct OscillatoryParams {
  int m = 0;
  double x = 0.0;
  double t = 0.0;
  double epsilon = 0.0;
};

/// Physicists' Hermite polynomial H_m(z) by the three-term recurrence;
/// entire in z.
std::complex<double> hermite_complex(int m, std::complex<double> z);

/// D_m(z) = 2^{-m/2} e^{-z^2/4} H_m(z / sqrt 2).
std::complex<double> parabolic_cylinder(int m, std::complex<double> z);

/// integral x^n e^{-a x^2 + b x} dx = sqrt(pi/a) e^{b^2/(4a)} (-i)^n
/// (2 sqrt a)^{-n} H_n(i b / (2 sqrt a)), Re(a) > 0, principal branches.
std::complex<double> gaussian_moment(std::complex<double> a, std::complex<double> b, int n);

/// Closed form of the t != 0 oscillatory limit:
/// i^{-m} 2^{-m} sqrt(pi) (it)^{-(m+1)/2} exp(-x^2/(4it)) H_m(-x/(2 sqrt(it))).
std::complex<double> i_m_closed(const OscillatoryParams& p);

struct OscillatoryQuadrature {
  std::complex<double> value;
  double tail_bound = 0.0;
  long panels = 0;
};

/// Regularized integral over [-L, L] by composite Gauss-Legendre panels sized
/// to the local phase rate 2|t|lambda + |x|. Oracle for i_m_closed via the
/// epsilon -> 0 limit and for gaussian_moment at a = it + epsilon, b = ix.
OscillatoryQuadrature i_m_quadrature(const OscillatoryParams& p, const QuadratureConfig& config);

}  // namespace fracshift
