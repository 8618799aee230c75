#include "fracshift/fock.hpp"

#include <algorithm>
#include <cmath>

#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

FockElement KernelSection::to_element(int order) const {
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(order) + 1);
  std::complex<double> wbar_n = 1.0;
  const std::complex<double> wbar = std::conj(w);
  for (int n = 0; n <= order; ++n) {
    coeffs[static_cast<std::size_t>(n)] = phi_coefficient(family, n) * wbar_n;
    wbar_n *= wbar;
  }
  return FockElement{PowerSeries(std::move(coeffs)), family};
}

std::complex<double> inner_product(const FockElement& f, const FockElement& g) {
  if (f.family.name != g.family.name)
    raise(Errc::incompatible_space, "inner_product: elements live in different spaces (" +
                                        f.family.name + " vs " + g.family.name + ")");
  const int order = std::min(f.series.truncation_order(), g.series.truncation_order());
  KahanComplex acc;
  for (int n = 0; n <= order; ++n)
    acc += std::conj(f.series.coeff(n)) * g.series.coeff(n) / phi_coefficient(f.family, n);
  return acc.value();
}

KernelValue kernel_eval(const WeightFamily& family, std::complex<double> z,
                        std::complex<double> w) {
  const int order = family.max_index / 2;
  const std::complex<double> base = z * std::conj(w);
  KahanComplex acc;
  std::complex<double> pw = 1.0;
  double prev_mag = 0.0, last_mag = 0.0;
  for (int n = 0; n <= order; ++n) {
    const std::complex<double> term = phi_coefficient(family, n) * pw;
    acc += term;
    prev_mag = last_mag;
    last_mag = std::abs(term);
    pw *= base;
  }
  KernelValue out;
  out.value = acc.value();
  if (last_mag == 0.0) {
    out.tail_bound = 0.0;
    return out;
  }
  const double ratio = prev_mag > 0.0 ? last_mag / prev_mag : 0.0;
  if (ratio >= 0.75)
    raise(Errc::out_of_envelope,
          "kernel_eval: |z conj(w)| outside the truncation envelope of " + family.name);
  out.tail_bound = last_mag * ratio / (1.0 - ratio);
  return out;
}

std::complex<double> quadrature_inner_product(const FockElement& f, const FockElement& g,
                                              const QuadratureConfig& config) {
  if (f.family.name != g.family.name)
    raise(Errc::incompatible_space, "quadrature_inner_product: family mismatch");
  const int deg = std::max(f.series.truncation_order(), g.series.truncation_order());
  if (deg > 10)
    raise(Errc::invalid_argument, "quadrature_inner_product: oracle limited to degree <= 10");
  const int order = std::min(f.series.truncation_order(), g.series.truncation_order());
  // z = r e^{i theta}: the angular integral of e^{i(m-n)theta} vanishes except
  // m = n (exact), leaving radial moments; r^2 -> x turns those into the
  // Mellin moments of the weight density.
  KahanComplex acc;
  for (int n = 0; n <= order; ++n) {
    const double moment = mellin_moment(f.family, n, config);
    acc += std::conj(f.series.coeff(n)) * g.series.coeff(n) * moment;
  }
  return acc.value() / f.family.normalization;
}

std::vector<std::complex<double>> ladder_apply(Ladder direction,
                                               std::span<const std::complex<double>> coeffs,
                                               const WeightFamily& family) {
  const std::size_t len = coeffs.size();
  if (direction == Ladder::raise_op) {
    std::vector<std::complex<double>> out(len + 1, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      const int n = static_cast<int>(i) + 1;
      out[i + 1] = coeffs[i] * std::sqrt(phi_coefficient(family, n - 1) / phi_coefficient(family, n));
    }
    return out;
  }
  if (len <= 1) return {std::complex<double>(0.0, 0.0)};  // lowering annihilates the ground state
  std::vector<std::complex<double>> out(len - 1, 0.0);
  for (std::size_t i = 1; i < len; ++i) {
    const int n = static_cast<int>(i);
    out[i - 1] = coeffs[i] * std::sqrt(phi_coefficient(family, n - 1) / phi_coefficient(family, n));
  }
  return out;
}

double intertwining_check(const WeightFamily& family, std::span<const std::complex<double>> coeffs,
                          int order) {
  // The transform is modeled as the coefficient map h_n -> e_n = sqrt(phi_n) z^n:
  // a vector c becomes the series sum_n c_n sqrt(phi_n) z^n.
  auto map_to_series = [&](std::span<const std::complex<double>> c, int len) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(len), 0.0);
    for (std::size_t i = 0; i < c.size() && i < out.size(); ++i)
      out[i] = c[i] * std::sqrt(phi_coefficient(family, static_cast<int>(i)));
    return out;
  };

  const int len = std::max<int>(static_cast<int>(coeffs.size()), order + 1);
  double worst = 0.0;

  // path pair 1: gl_derivative(map(c)) vs map(lower(c))
  {
    auto mapped = map_to_series(coeffs, len + 1);
    const PowerSeries series(mapped);
    const PowerSeries deriv = gl_derivative(series, family);
    const auto lowered = ladder_apply(Ladder::lower_op, coeffs, family);
    const auto mapped_lowered = map_to_series(lowered, len);
    for (int k = 0; k < len; ++k) {
      const std::complex<double> lhs = k <= deriv.truncation_order() ? deriv.coeff(k) : 0.0;
      const std::complex<double> rhs =
          k < static_cast<int>(mapped_lowered.size()) ? mapped_lowered[static_cast<std::size_t>(k)] : 0.0;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }

  // path pair 2: z * map(c) vs map(raise(c))
  {
    auto mapped = map_to_series(coeffs, len);
    std::vector<std::complex<double>> shifted(mapped.size() + 1, 0.0);
    for (std::size_t i = 0; i < mapped.size(); ++i) shifted[i + 1] = mapped[i];
    const auto raised = ladder_apply(Ladder::raise_op, coeffs, family);
    const auto mapped_raised = map_to_series(raised, len + 1);
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      const std::complex<double> rhs = k < mapped_raised.size() ? mapped_raised[k] : 0.0;
      worst = std::max(worst, std::abs(shifted[k] - rhs));
    }
  }
  return worst;
}

}  // namespace fracshift
