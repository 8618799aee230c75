#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace test_support {

using Cx = std::complex<double>;

inline double rel_err(Cx got, Cx want) {
  const double scale = std::abs(want);
  return scale > 0 ? std::abs(got - want) / scale : std::abs(got - want);
}

/// Independent reference integrator (adaptive Simpson), deliberately a
/// different algorithm family from the library's Gauss-Legendre rules.
inline Cx simpson_step(const std::function<Cx(double)>& f, double a, double b, Cx fa, Cx fm, Cx fb,
                       Cx whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Cx flm = f(lm), frm = f(rm);
  const Cx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Cx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Cx delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

inline Cx adaptive_simpson(const std::function<Cx(double)>& f, double a, double b,
                           double tol = 1e-12, int depth = 28) {
  const double m = 0.5 * (a + b);
  const Cx fa = f(a), fm = f(m), fb = f(b);
  const Cx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline std::vector<Cx> random_coefficients(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Cx> out(static_cast<std::size_t>(count));
  for (auto& c : out) c = Cx(u(rng), u(rng));
  return out;
}

}  // namespace test_support
