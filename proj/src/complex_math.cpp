#include "fracshift/complex_math.hpp"

#include <cmath>

#include "fracshift/errors.hpp"

namespace fracshift {

Complex pow_int(Complex z, long n) {
  if (n < 0) return 1.0 / pow_int(z, -n);
  Complex result = 1.0;
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex cpow(Complex z, double w) {
  if (w == std::floor(w) && std::abs(w) <= 64.0) return pow_int(z, static_cast<long>(w));
  if (z == Complex(0.0, 0.0)) return w > 0 ? Complex(0.0) : Complex(INFINITY, 0.0);
  return std::exp(w * std::log(z));
}

namespace {

// Lanczos, g = 607/128, 15 coefficients.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

Complex lgamma_core(Complex z) {
  // valid for Re(z) >= 0.5
  Complex ser = kLanczos[0];
  for (int k = 1; k < 15; ++k) ser += kLanczos[k] / (z + static_cast<double>(k - 1));
  const Complex t = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(t) - t + kLogSqrtTwoPi + std::log(ser);
}

}  // namespace

Complex lgamma_complex(Complex z) {
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = 3.14159265358979323846;
    const Complex sin_piz = std::sin(pi * z);
    if (sin_piz == Complex(0.0, 0.0)) raise(Errc::domain, "lgamma: pole at nonpositive integer");
    return std::log(pi) - std::log(sin_piz) - lgamma_core(1.0 - z);
  }
  return lgamma_core(z);
}

Complex gamma_complex(Complex z) { return std::exp(lgamma_complex(z)); }

double lgamma_real(double x) {
  if (x <= 0.0) raise(Errc::domain, "lgamma_real: requires x > 0");
  return lgamma_complex(Complex(x, 0.0)).real();
}

double gamma_real(double x) { return std::exp(lgamma_real(x)); }

}  // namespace fracshift
