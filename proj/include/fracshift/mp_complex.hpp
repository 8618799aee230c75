#pragma once

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

namespace fracshift::mp {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Sets the thread-local default precision (in bits) for newly created Reals,
/// restoring the previous value on destruction. Superoscillatory sums need
/// precision that scales like n*log2(a), far beyond double.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

unsigned digits10_for_bits(unsigned bits);

/// Minimal complex layer over mpfr reals; only the operations the weight
/// families and superposition sums need.
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
  explicit Complex(double r) : re(r), im(0) {}

  std::complex<double> to_double() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, const Real& w);  // principal; integer w exact

Real pi_value();

}  // namespace fracshift::mp
