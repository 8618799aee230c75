#pragma once

#include <complex>

namespace fracshift {

using Complex = std::complex<double>;

/// z^n by binary exponentiation; exact power-of-products, no log/exp branch noise.
Complex pow_int(Complex z, long n);

/// Principal-branch complex power. Integer exponents with |w| <= 64 are routed
/// through pow_int so that integer-exponent laws hold exactly and the result is
/// entire in z (needed by weight families whose exponents happen to be integers).
Complex cpow(Complex z, double w);

/// log Gamma(z), Lanczos approximation (g = 607/128, 15 terms) with reflection
/// for Re(z) < 0.5. Relative accuracy ~1e-13 on the ranges used here.
Complex lgamma_complex(Complex z);

/// Gamma(z) = exp(lgamma_complex(z)).
Complex gamma_complex(Complex z);

/// Real positive-argument conveniences built on the same Lanczos core.
double lgamma_real(double x);
double gamma_real(double x);

}  // namespace fracshift
