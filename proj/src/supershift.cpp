#include "fracshift/supershift.hpp"

#include <cmath>

#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

namespace detail {

double log_max_coefficient(int n, double a) {
  const double p = (1.0 + a) / 2.0, q = std::abs((1.0 - a) / 2.0);
  if (q == 0.0) return 0.0;  // a = 1: C_0 = 1 is the only coefficient
  double best = n * std::log(p);
  for (int j = 1; j <= n; ++j) {
    const double lc = lgamma_real(n + 1.0) - lgamma_real(j + 1.0) - lgamma_real(n - j + 1.0);
    best = std::max(best, lc + (n - j) * std::log(p) + j * std::log(q));
  }
  return best;
}

unsigned superposition_bits(int n, double a, double growth_log2) {
  const double cancel_bits = a > 1.0 ? n * std::log2(a) : 0.0;
  if (cancel_bits <= 16.0) return 0;  // double + compensated summation suffices
  const double bits = cancel_bits + std::max(growth_log2, 0.0) + 96.0;
  return static_cast<unsigned>(std::ceil(bits));
}

}  // namespace detail

namespace {

void check_overflow(int n, double a) {
  if (detail::log_max_coefficient(n, a) > 709.0) {
    const int suggested = a > 1.0 ? static_cast<int>(709.0 / std::log(a)) : n;
    raise(Errc::coefficient_overflow,
          "coefficients: max |C_j| overflows double range; largest usable n for a=" +
              std::to_string(a) + " is about " + std::to_string(suggested));
  }
}

// sum_j C_j * term(j) in double with Kahan compensation; C_j by the
// multiplicative recurrence.
template <typename TermFn>
std::complex<double> weighted_sum_double(int n, double a, TermFn&& term) {
  const double p = (1.0 + a) / 2.0, q = (1.0 - a) / 2.0;
  if (q == 0.0) return term(0);
  KahanComplex acc;
  double c = std::pow(p, n);
  for (int j = 0; j <= n; ++j) {
    acc += c * term(j);
    if (j < n) c *= (static_cast<double>(n - j) / (j + 1)) * (q / p);
  }
  return acc.value();
}

// Same sum carried in MPFR; C_j exact to working precision, term() supplies
// the per-node factor in the same arithmetic.
template <typename TermFn>
mp::Complex weighted_sum_mp(int n, double a, TermFn&& term) {
  const mp::Real p = (mp::Real(1) + mp::Real(a)) / 2;
  const mp::Real q = (mp::Real(1) - mp::Real(a)) / 2;
  mp::Complex acc;
  mp::Real c = pow(p, n);
  for (int j = 0; j <= n; ++j) {
    acc = acc + c * term(j);
    if (j < n) c = c * (mp::Real(n - j) / mp::Real(j + 1)) * (q / p);
  }
  return acc;
}

double lambda_of(int n, int j) { return 1.0 - 2.0 * static_cast<double>(j) / n; }

}  // namespace

void SupershiftSpec::validate() const {
  if (n < 1) raise(Errc::invalid_argument, "SupershiftSpec: n >= 1 required");
  if (!(a >= 1.0)) raise(Errc::usage, "SupershiftSpec: a >= 1 required");
}

CoefficientSet coefficients(int n, double a) {
  if (n < 1) raise(Errc::invalid_argument, "coefficients: n >= 1 required");
  if (!(a >= 1.0)) raise(Errc::usage, "coefficients: a >= 1 required");
  check_overflow(n, a);

  CoefficientSet set;
  set.C.resize(static_cast<std::size_t>(n) + 1);
  set.Z.resize(static_cast<std::size_t>(n) + 1);
  set.lambda.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    set.lambda[static_cast<std::size_t>(j)] = lambda_of(n, j);
    set.Z[static_cast<std::size_t>(j)] =
        std::complex<double>(0.0, -lambda_of(n, j));  // z_j = -i lambda_j
  }

  const unsigned bits = std::max(detail::superposition_bits(n, a, 0.0), 128u);
  {
    mp::PrecisionGuard guard(bits);
    const mp::Real p = (mp::Real(1) + mp::Real(a)) / 2;
    const mp::Real q = (mp::Real(1) - mp::Real(a)) / 2;
    mp::Real c = pow(p, n);
    mp::Real sum = 0;
    for (int j = 0; j <= n; ++j) {
      set.C[static_cast<std::size_t>(j)] = c.convert_to<double>();
      sum += c;
      if (j < n) c = c * (mp::Real(n - j) / mp::Real(j + 1)) * (q / p);
    }
    set.partition_defect = abs(sum - 1).convert_to<double>();
  }
  KahanReal dsum;
  for (double cj : set.C) dsum += cj;
  set.partition_defect_double = std::abs(dsum.value() - 1.0);
  return set;
}

std::complex<double> classical_F(int n, double a, std::complex<double> z, ClassicalForm form) {
  if (n < 1) raise(Errc::invalid_argument, "classical_F: n >= 1 required");
  if (form == ClassicalForm::product) {
    const std::complex<double> g = std::cos(z / static_cast<double>(n)) +
                                   std::complex<double>(0.0, a) * std::sin(z / static_cast<double>(n));
    return pow_int(g, n);
  }
  check_overflow(n, a);
  const unsigned bits = detail::superposition_bits(n, a, 1.5 * std::abs(z.imag()) + 4.0);
  if (bits == 0) {
    return weighted_sum_double(n, a, [&](int j) {
      return std::exp(std::complex<double>(0.0, 1.0) * lambda_of(n, j) * z);
    });
  }
  mp::PrecisionGuard guard(bits);
  const mp::Complex iz{mp::Real(-z.imag()), mp::Real(z.real())};  // i z
  const auto result = weighted_sum_mp(n, a, [&](int j) {
    const mp::Real lam = mp::Real(1) - mp::Real(2 * j) / n;
    return mp::exp(lam * iz);
  });
  return result.to_double();
}

std::complex<double> fractional_F(const SupershiftSpec& spec, std::complex<double> z) {
  spec.validate();
  const int n = spec.n;
  const double a = spec.a;
  check_overflow(n, a);
  // per-term argument -z_j z = i lambda_j z must stay in the weight's domain
  if (std::isfinite(spec.family.domain_radius)) {
    for (int j = 0; j <= n; ++j) {
      if (std::abs(lambda_of(n, j)) * std::abs(z) >= spec.family.domain_radius)
        raise(Errc::domain, "fractional_F: term j=" + std::to_string(j) +
                                " argument leaves the domain of " + spec.family.name);
    }
  }
  const unsigned bits = detail::superposition_bits(n, a, 1.5 * std::abs(z) + 4.0);
  if (bits == 0) {
    return weighted_sum_double(n, a, [&](int j) {
      const std::complex<double> arg = std::complex<double>(0.0, 1.0) * lambda_of(n, j) * z;
      return spec.family.weight(arg);
    });
  }
  if (!spec.family.weight_mp)
    raise(Errc::invalid_family, "fractional_F: family " + spec.family.name +
                                    " lacks an extended-precision weight for n*log2(a) of " +
                                    std::to_string(n * std::log2(a)) + " bits");
  mp::PrecisionGuard guard(bits);
  const mp::Complex iz{mp::Real(-z.imag()), mp::Real(z.real())};
  const auto result = weighted_sum_mp(n, a, [&](int j) {
    const mp::Real lam = mp::Real(1) - mp::Real(2 * j) / n;
    return spec.family.weight_mp(mp::Complex{lam * iz.re, lam * iz.im});
  });
  return result.to_double();
}

std::complex<double> kernel_supershift(const SupershiftSpec& spec, std::complex<double> z) {
  spec.validate();
  const int n = spec.n;
  const double a = spec.a;
  check_overflow(n, a);
  const int order = spec.family.max_index / 2;
  std::vector<double> phi(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) phi[static_cast<std::size_t>(k)] = phi_coefficient(spec.family, k);

  const unsigned bits = detail::superposition_bits(n, a, 1.5 * std::abs(z) + 8.0);
  if (bits == 0) {
    return weighted_sum_double(n, a, [&](int j) {
      // phi(z conj(z_j)) with conj(z_j) = i lambda_j
      const std::complex<double> w = std::complex<double>(0.0, lambda_of(n, j)) * z;
      KahanComplex acc;
      std::complex<double> wk = 1.0;
      for (int k = 0; k <= order; ++k) {
        acc += phi[static_cast<std::size_t>(k)] * wk;
        wk *= w;
      }
      return acc.value();
    });
  }
  mp::PrecisionGuard guard(bits);
  const mp::Complex iz{mp::Real(-z.imag()), mp::Real(z.real())};
  const auto result = weighted_sum_mp(n, a, [&](int j) {
    const mp::Real lam = mp::Real(1) - mp::Real(2 * j) / n;
    const mp::Complex w{lam * iz.re, lam * iz.im};
    mp::Complex acc;
    mp::Complex wk{mp::Real(1), mp::Real(0)};
    for (int k = 0; k <= order; ++k) {
      acc = acc + mp::Real(phi[static_cast<std::size_t>(k)]) * wk;
      wk = wk * w;
    }
    return acc;
  });
  return result.to_double();
}

double supershift_error(const SupershiftSpec& spec, std::span<const std::complex<double>> grid) {
  spec.validate();
  if (std::isfinite(spec.family.domain_radius)) {
    const double bound = spec.family.domain_radius / spec.a;
    for (const auto& z : grid) {
      if (std::abs(z) >= bound)
        raise(Errc::domain,
              "supershift_error: limit target K(iaz) leaves the domain; need |z| < " +
                  std::to_string(bound));
    }
  }
  double worst = 0.0;
  for (const auto& z : grid) {
    const auto limit = weight_eval(spec.family, std::complex<double>(0.0, 1.0) * spec.a * z);
    worst = std::max(worst, std::abs(fractional_F(spec, z) - limit));
  }
  return worst;
}

std::complex<double> derivative_moment(int n, double a, int k) {
  if (n < 1) raise(Errc::invalid_argument, "derivative_moment: n >= 1 required");
  if (k < 0) raise(Errc::invalid_argument, "derivative_moment: k >= 0 required");
  check_overflow(n, a);
  const unsigned bits = detail::superposition_bits(n, a, 0.0);
  const std::complex<double> ik = pow_int(std::complex<double>(0.0, 1.0), k);
  if (bits == 0) {
    const auto real_sum = weighted_sum_double(
        n, a, [&](int j) { return std::complex<double>(std::pow(lambda_of(n, j), k), 0.0); });
    return ik * real_sum;
  }
  mp::PrecisionGuard guard(bits);
  const auto sum = weighted_sum_mp(n, a, [&](int j) {
    const mp::Real lam = mp::Real(1) - mp::Real(2 * j) / n;
    return mp::Complex{pow(lam, k), mp::Real(0)};
  });
  return ik * sum.to_double();
}

}  // namespace fracshift
