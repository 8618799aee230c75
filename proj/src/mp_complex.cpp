#include "fracshift/mp_complex.hpp"

#include <cmath>
#include <mutex>

namespace fracshift::mp {

namespace {
// Boost 1.74's variable-precision default is process-global, so extended
// precision evaluations are serialized; concurrent callers in double mode are
// unaffected.
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 4;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(0) {
  precision_mutex().lock();
  saved_digits10_ = Real::default_precision();
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(saved_digits10_);
  precision_mutex().unlock();
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex exp(const Complex& z) {
  const Real m = boost::multiprecision::exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {boost::multiprecision::log(abs(z)), atan2(z.im, z.re)}; }

Complex sqrt(const Complex& z) {
  const Real r = abs(z);
  if (r == 0) return Complex(Real(0), Real(0));
  const Real theta = atan2(z.im, z.re) / 2;
  const Real s = boost::multiprecision::sqrt(r);
  return {s * cos(theta), s * sin(theta)};
}

Complex pow(const Complex& z, const Real& w) {
  if (w == floor(w) && boost::multiprecision::abs(w) <= 256) {
    long n = w.convert_to<long>();
    if (n == 0) return Complex(Real(1), Real(0));
    const bool inv = n < 0;
    if (inv) n = -n;
    Complex result(Real(1), Real(0));
    Complex base = z;
    while (n > 0) {
      if (n & 1) result = result * base;
      base = base * base;
      n >>= 1;
    }
    if (inv) return Complex(Real(1), Real(0)) / result;
    return result;
  }
  const Complex lz = log(z);
  return exp(Complex(w * lz.re, w * lz.im));
}

Real pi_value() { return 4 * atan(Real(1)); }

}  // namespace fracshift::mp
