#include "fracshift/weights.hpp"

#include <cmath>
#include <sstream>

#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "fracshift/kahan.hpp"

namespace fracshift {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

WeightFamily exponential_family() {
  WeightFamily f;
  f.name = "exp";
  f.normalization = 1.0;
  f.phi = [](int n) { return std::exp(-lgamma_real(n + 1.0)); };
  f.weight = [](std::complex<double> x) { return std::exp(x); };
  f.weight_mp = [](const mp::Complex& x) { return mp::exp(x); };
  f.head_alpha = 0.0;
  f.decay_power = 1.0;
  f.density_scale = 1.0;
  return f;
}

WeightFamily mittag_leffler_family(double rho, double mu) {
  if (!(rho > 0.0) || !(mu > 0.0))
    raise(Errc::invalid_family, "mittag_leffler_family: rho > 0 and mu > 0 required");
  WeightFamily f;
  {
    std::ostringstream name;
    name << "ml:" << rho << ":" << mu;
    f.name = name.str();
  }
  f.normalization = 1.0 / kPi;
  f.phi = [rho, mu](int n) { return std::exp(-lgamma_real(mu + n / rho)); };
  // K(x) = (rho/pi) (-x)^(mu*rho - 1) exp(-(-x)^rho), principal branches.
  // For integer exponents this is the entire continuation automatically.
  const double expo = mu * rho - 1.0;
  f.weight = [rho, expo](std::complex<double> x) {
    return (rho / kPi) * cpow(-x, expo) * std::exp(-cpow(-x, rho));
  };
  f.weight_mp = [rho, expo](const mp::Complex& x) {
    const mp::Complex neg{-x.re, -x.im};
    const mp::Complex decay = mp::pow(neg, mp::Real(rho));
    const mp::Real scale = mp::Real(rho) / mp::pi_value();
    return scale * (mp::pow(neg, mp::Real(expo)) * mp::exp(mp::Complex{-decay.re, -decay.im}));
  };
  f.head_alpha = expo;
  f.decay_power = rho;
  f.density_scale = rho / kPi;
  return f;
}

WeightFamily gamma_shifted_family() {
  WeightFamily f;
  f.name = "gamma-shifted";
  f.normalization = 1.0;
  f.phi = [](int n) { return std::exp(-lgamma_real(n + 1.5)); };
  // K(x) = sqrt(-x) exp(x): density K(-x) = sqrt(x) e^{-x} on x > 0.
  f.weight = [](std::complex<double> x) { return std::sqrt(-x) * std::exp(x); };
  f.weight_mp = [](const mp::Complex& x) {
    return mp::sqrt(mp::Complex{-x.re, -x.im}) * mp::exp(x);
  };
  f.head_alpha = 0.5;
  f.decay_power = 1.0;
  f.density_scale = 1.0;
  return f;
}

WeightFamily parse_family(const std::string& name) {
  if (name == "exp") return exponential_family();
  if (name == "gamma-shifted") return gamma_shifted_family();
  if (name.rfind("ml:", 0) == 0) {
    const auto rest = name.substr(3);
    const auto sep = rest.find(':');
    if (sep != std::string::npos) {
      try {
        const double rho = std::stod(rest.substr(0, sep));
        const double mu = std::stod(rest.substr(sep + 1));
        return mittag_leffler_family(rho, mu);
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
  }
  raise(Errc::usage, "unknown family '" + name + "' (expected exp, ml:<rho>:<mu>, gamma-shifted)");
}

double phi_coefficient(const WeightFamily& family, int n) {
  if (n < 0) raise(Errc::invalid_argument, "phi_coefficient: n >= 0 required");
  if (n > family.max_index)
    raise(Errc::index_range, "phi_coefficient: index " + std::to_string(n) +
                                 " beyond guaranteed range " + std::to_string(family.max_index));
  const double v = family.phi(n);
  if (!(v > 0.0) || !std::isfinite(v))
    raise(Errc::invalid_family, "phi_coefficient: family returned nonpositive phi");
  return v;
}

PowerSeries phi_series(const WeightFamily& family, int n) {
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = phi_coefficient(family, k);
  return PowerSeries(std::move(coeffs));
}

std::complex<double> weight_eval(const WeightFamily& family, std::complex<double> x) {
  if (std::isfinite(family.domain_radius) && std::abs(x) >= family.domain_radius)
    raise(Errc::domain, "weight_eval: |x| outside the declared domain of " + family.name);
  return family.weight(x);
}

namespace {

// integral_0^inf u^{s-1} e^{-u} du by split Gauss-Legendre:
// [0,1] under u = v^2 (flattens fractional powers at the origin), then
// geometrically widening panels out to u_max.
double gamma_shape_quadrature(double s, double u_max, int nodes) {
  const int n_head = std::max(64, nodes / 4);
  const double head = gl_integrate(
      [s](double v) { return 2.0 * v * std::pow(v * v, s - 1.0) * std::exp(-v * v); }, 0.0, 1.0,
      n_head);
  KahanReal tail;
  double lo = 1.0;
  const int n_panel = std::max(48, nodes / 4);
  while (lo < u_max) {
    const double hi = std::min(u_max, lo * 2.0);
    tail += gl_integrate([s](double u) { return std::pow(u, s - 1.0) * std::exp(-u); }, lo, hi,
                         n_panel);
    lo = hi;
  }
  return head + tail.value();
}

double generic_moment_quadrature(const WeightFamily& family, int n, const QuadratureConfig& q,
                                 double* integrand_at_cutoff, double* decay_rate) {
  auto density = [&family, n](double x) {
    const auto g = family.weight(std::complex<double>(-x, 0.0));
    return std::pow(x, n) * g.real();
  };
  const int n_head = std::max(64, q.nodes / 4);
  // u = v^2 soaks up integrable endpoint singularities of the density.
  const double head = gl_integrate([&density](double v) { return 2.0 * v * density(v * v); }, 0.0,
                                   1.0, n_head);
  KahanReal tail;
  double lo = 1.0;
  const int n_panel = std::max(48, q.nodes / 4);
  while (lo < q.cutoff) {
    const double hi = std::min(q.cutoff, lo * 2.0);
    tail += gl_integrate(density, lo, hi, n_panel);
    lo = hi;
  }
  const double L = q.cutoff;
  const double fL = std::abs(density(L));
  const double f_inner = std::abs(density(L * 0.98));
  *integrand_at_cutoff = fL;
  // local exponential decay rate of the integrand at the cutoff
  *decay_rate = (fL > 0.0 && f_inner > 0.0) ? std::log(f_inner / fL) / (0.02 * L) : 0.0;
  return head + tail.value();
}

}  // namespace

double mellin_moment(const WeightFamily& family, int n, const QuadratureConfig& config) {
  config.validate();
  if (n < 0) raise(Errc::invalid_argument, "mellin_moment: n >= 0 required");
  if (n > family.max_index)
    raise(Errc::index_range, "mellin_moment: index beyond guaranteed range");

  if (family.decay_power > 0.0) {
    // g(x) = c x^alpha e^{-x^p}: substituting u = x^p gives
    // integral = (c/p) integral u^{s-1} e^{-u} du with s = (n+1+alpha)/p.
    const double p = family.decay_power;
    const double s = (n + 1.0 + family.head_alpha) / p;
    const double u_max = std::max(60.0, 3.0 * s + 40.0);
    const double value =
        (family.density_scale / p) * gamma_shape_quadrature(s, u_max, config.nodes);
    return value;
  }

  double f_cut = 0.0, rate = 0.0;
  const double value = generic_moment_quadrature(family, n, config, &f_cut, &rate);
  const double scale = std::max(std::abs(value), 1e-300);
  if (rate <= 0.5 / config.cutoff) {
    raise(Errc::divergent_moment,
          "mellin_moment: integrand not decaying at cutoff for " + family.name);
  }
  const double remainder = f_cut / rate;
  if (remainder > config.rel_tol * scale) {
    raise(Errc::divergent_moment, "mellin_moment: estimated tail " + std::to_string(remainder) +
                                      " above tolerance at cutoff");
  }
  return value;
}

CarlemanReport carleman_diagnostic(const WeightFamily& family, int n_max) {
  if (n_max < 10) raise(Errc::invalid_argument, "carleman_diagnostic: N >= 10 required");
  CarlemanReport report;
  report.partial_sums.reserve(static_cast<std::size_t>(n_max));
  KahanReal sum;
  std::vector<double> terms(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) {
    // phi_n^{-1/(2n)} = exp(log(1/phi_n)/(2n)); log-domain avoids overflow.
    const double log_inv_phi = -std::log(phi_coefficient(family, n));
    const double term = std::exp(log_inv_phi / (2.0 * n));
    terms[static_cast<std::size_t>(n)] = term;
    sum += term;
    report.partial_sums.push_back(sum.value());
  }
  report.last_term = terms[static_cast<std::size_t>(n_max)];
  double floor_term = terms[static_cast<std::size_t>(n_max)];
  for (int n = n_max - n_max / 2; n <= n_max; ++n)
    floor_term = std::min(floor_term, terms[static_cast<std::size_t>(n)]);
  // finite-N heuristic: divergence when the tail terms stay above a fixed floor
  report.diverging = floor_term >= 1e-4;
  return report;
}

std::complex<double> mittag_leffler_eval(double rho, std::complex<double> mu,
                                         std::complex<double> z) {
  if (!(rho > 0.0)) raise(Errc::invalid_argument, "mittag_leffler_eval: rho > 0 required");
  if (!(mu.real() > 0.0))
    raise(Errc::invalid_argument, "mittag_leffler_eval: Re(mu) > 0 required");
  if (std::abs(z) > 50.0)
    raise(Errc::out_of_envelope, "mittag_leffler_eval: |z| beyond Taylor validity envelope (50)");
  if (z == std::complex<double>(0.0, 0.0)) return std::exp(-lgamma_complex(mu));
  KahanComplex sum;
  const std::complex<double> log_z = std::log(z);
  const bool unit_steps = rho == 1.0;  // Gamma ratio is algebraic: term_{k+1} = term_k z/(mu+k)
  std::complex<double> term = std::exp(-lgamma_complex(mu));
  int small_streak = 0;
  const double eps_guard = 1e-18;
  for (int k = 0; k <= 4000; ++k) {
    if (!unit_steps && k > 0) {
      // log space keeps z^k representable even when it alone would overflow
      term = std::exp(static_cast<double>(k) * log_z - lgamma_complex(mu + k / rho));
    }
    sum += term;
    const double scale = std::max(std::abs(sum.value()), 1e-300);
    if (std::abs(term) < eps_guard * scale) {
      if (++small_streak >= 3 && k >= 4) break;
    } else {
      small_streak = 0;
    }
    if (unit_steps) term *= z / (mu + static_cast<double>(k));
  }
  return sum.value();
}

}  // namespace fracshift
