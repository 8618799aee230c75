#include "fracshift/oscillatory.hpp"

#include <cmath>

#include "doctest.h"
#include "fracshift/complex_math.hpp"
#include "fracshift/errors.hpp"
#include "support.hpp"

using namespace fracshift;
using test_support::Cx;
using test_support::rel_err;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("hermite_complex") {
  CHECK(hermite_complex(0, Cx(5.0, -7.0)) == Cx(1.0, 0.0));
  CHECK(hermite_complex(1, Cx(3.0, 4.0)) == Cx(6.0, 8.0));
  CHECK(hermite_complex(3, 2.0).real() == doctest::Approx(40.0));  // 8*8 - 12*2

  // recurrence vs explicit polynomials at random points
  const auto points = test_support::random_coefficients(20, 13);
  for (const auto& z : points) {
    const Cx z2 = 2.0 * z;
    CHECK(rel_err(hermite_complex(2, z2), 4.0 * z2 * z2 - 2.0) < 1e-12);
    CHECK(rel_err(hermite_complex(4, z2), 16.0 * pow_int(z2, 4) - 48.0 * z2 * z2 + 12.0) < 1e-12);
    CHECK(rel_err(hermite_complex(6, z2),
                  64.0 * pow_int(z2, 6) - 480.0 * pow_int(z2, 4) + 720.0 * z2 * z2 - 120.0) <
          1e-12);
  }
}

TEST_CASE("parabolic_cylinder") {
  SUBCASE("D_0 is the bare gaussian factor") {
    const Cx z(1.3, -0.4);
    CHECK(rel_err(parabolic_cylinder(0, z), std::exp(-z * z / 4.0)) < 1e-14);
  }
  SUBCASE("D_1(2) = 2/e") {
    CHECK(parabolic_cylinder(1, 2.0).real() == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-13));
  }
  SUBCASE("D-form assembly of the oscillatory integral matches the H-form") {
    // 2^{-m/2} D_m(q/(beta sqrt 2)) chain vs the direct H_m expression
    for (int m = 0; m <= 5; ++m) {
      const double x = 1.2, t = 0.8;
      const Cx it(0.0, t);
      const Cx beta = std::sqrt(it);
      const Cx via_d = pow_int(Cx(0.0, 1.0), -m) * std::pow(2.0, -m / 2.0) * kSqrtPi *
                       cpow(it, -(m + 1) / 2.0) * std::exp(-x * x / (8.0 * it)) *
                       parabolic_cylinder(m, -x / (beta * std::sqrt(2.0)));
      const Cx via_h = i_m_closed({m, x, t, 0.0});
      CHECK(rel_err(via_d, via_h) < 1e-12);
    }
  }
}

TEST_CASE("gaussian_moment") {
  SUBCASE("n=0 is the plain gaussian integral") {
    const Cx a(1.7, 0.4), b(0.2, -1.1);
    CHECK(rel_err(gaussian_moment(a, b, 0), std::sqrt(kPi / a) * std::exp(b * b / (4.0 * a))) <
          1e-14);
  }
  SUBCASE("a=1, b=0: second moment is sqrt(pi)/2, odd moments vanish") {
    CHECK(gaussian_moment(1.0, 0.0, 2).real() == doctest::Approx(kSqrtPi / 2.0).epsilon(1e-13));
    CHECK(std::abs(gaussian_moment(1.0, 0.0, 1)) < 1e-16);
    CHECK(std::abs(gaussian_moment(1.0, 0.0, 3)) < 1e-16);
  }
  SUBCASE("even-moment reduction to Gamma((n+1)/2) a^{-(n+1)/2}") {
    for (double a : {0.5, 1.0, 2.3})
      for (int n = 0; n <= 8; n += 2) {
        const double expected = gamma_real((n + 1) / 2.0) * std::pow(a, -(n + 1) / 2.0);
        CHECK(gaussian_moment(a, 0.0, n).real() == doctest::Approx(expected).epsilon(1e-10));
      }
  }
  SUBCASE("frozen cross-check at complex parameters") {
    // integral x^3 e^{-(1+0.5i)x^2 + (0.3-0.2i)x}, independent multiprecision value
    const Cx expected(-0.080540040929232866, -0.35240995636480817);
    CHECK(rel_err(gaussian_moment(Cx(1.0, 0.5), Cx(0.3, -0.2), 3), expected) < 1e-13);
  }
  SUBCASE("hypothesis Re(a) > 0 enforced") {
    CHECK_THROWS_AS(gaussian_moment(Cx(0.0, 1.0), 0.0, 2), Error);
    CHECK_THROWS_AS(gaussian_moment(Cx(-1.0, 0.0), 0.0, 0), Error);
  }
  SUBCASE("against the independent Simpson oracle") {
    const Cx a(0.9, -0.6), b(1.1, 0.7);
    const int n = 4;
    const double L = std::abs(b) / a.real() + std::sqrt(60.0 / a.real());
    const Cx numeric = test_support::adaptive_simpson(
        [&](double x) { return pow_int(Cx(x, 0.0), n) * std::exp(-a * x * x + b * x); }, -L, L,
        1e-13);
    CHECK(rel_err(gaussian_moment(a, b, n), numeric) < 1e-9);
  }
}

TEST_CASE("i_m_closed") {
  SUBCASE("m=0 fresnel form") {
    for (double t : {0.5, 1.0, -0.7})
      for (double x : {0.0, 1.0, 2.0}) {
        const Cx it(0.0, t);
        const Cx expected = kSqrtPi * cpow(it, -0.5) * std::exp(Cx(0.0, x * x / (4.0 * t)));
        CHECK(rel_err(i_m_closed({0, x, t, 0.0}), expected) < 1e-13);
      }
  }
  SUBCASE("frozen value at (x,t) = (1, 0.5)") {
    CHECK(rel_err(i_m_closed({0, 1.0, 0.5, 0.0}),
                  Cx(2.4052342334315902168, -0.70571494918864873057)) < 1e-13);
  }
  SUBCASE("parity in x") {
    for (int m = 0; m <= 4; ++m) {
      const Cx plus = i_m_closed({m, 1.3, 0.7, 0.0});
      const Cx minus = i_m_closed({m, -1.3, 0.7, 0.0});
      CHECK(std::abs(minus - std::pow(-1.0, m) * plus) < 1e-13 * std::abs(plus));
    }
  }
  SUBCASE("m=1 vanishes at x=0") { CHECK(std::abs(i_m_closed({1, 0.0, 1.0, 0.0})) < 1e-16); }
  SUBCASE("t=0 is singular") { CHECK_THROWS_AS(i_m_closed({2, 1.0, 0.0, 0.0}), Error); }
  SUBCASE("equals gaussian_moment at a = it + eps in the small-eps limit") {
    const int m = 3;
    const double x = 2.0, t = 1.0;
    const Cx g3 = gaussian_moment(Cx(1e-3, t), Cx(0.0, x), m);
    const Cx g4 = gaussian_moment(Cx(1e-4, t), Cx(0.0, x), m);
    const Cx extrapolated = (10.0 * g4 - g3) / 9.0;
    CHECK(rel_err(extrapolated, i_m_closed({m, x, t, 0.0})) < 1e-5);
  }
}

TEST_CASE("i_m_quadrature") {
  QuadratureConfig q;
  q.rel_tol = 1e-4;
  SUBCASE("pure gaussian: m=0, x=0, t=0, eps=1") {
    const auto out = i_m_quadrature({0, 0.0, 0.0, 1.0}, q);
    CHECK(rel_err(out.value, kSqrtPi) < 1e-12);
  }
  SUBCASE("agrees with gaussian_moment at m=2, x=1, t=1, eps=1e-3") {
    const auto out = i_m_quadrature({2, 1.0, 1.0, 1e-3}, q);
    const Cx expected = gaussian_moment(Cx(1e-3, 1.0), Cx(0.0, 1.0), 2);
    CHECK(rel_err(out.value, expected) < 1e-6);
  }
  SUBCASE("eps ladder converges monotonically to the closed form") {
    const Cx closed = i_m_closed({3, 2.0, 1.0, 0.0});
    double prev = 1e300;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const auto out = i_m_quadrature({3, 2.0, 1.0, eps}, q);
      const double gap = std::abs(out.value - closed);
      CHECK(gap < prev);
      prev = gap;
    }
    // raw regularization bias at eps = 1e-4 stays below ~(m+1)/(2t) * eps
    CHECK(prev / std::abs(closed) < 5e-4);
  }
  SUBCASE("epsilon is required") { CHECK_THROWS_AS(i_m_quadrature({1, 0.0, 1.0, 0.0}, q), Error); }
}

TEST_CASE("free-equation mode property of i_m_closed") {
  // each mode solves i d_t psi + d_xx psi = 0; central differences should
  // show O(h^2) residuals against the mode scale
  auto residual = [](int m, double h) {
    double worst = 0.0, scale = 0.0;
    for (double x : {-1.5, 0.0, 1.0})
      for (double t : {0.6, 0.9}) {
        const Cx center = i_m_closed({m, x, t, 0.0});
        const Cx dt = (i_m_closed({m, x, t + h, 0.0}) - i_m_closed({m, x, t - h, 0.0})) / (2.0 * h);
        const Cx dxx = (i_m_closed({m, x + h, t, 0.0}) - 2.0 * center +
                        i_m_closed({m, x - h, t, 0.0})) /
                       (h * h);
        worst = std::max(worst, std::abs(Cx(0.0, 1.0) * dt + dxx));
        scale = std::max(scale, std::abs(center));
      }
    return worst / scale;
  };
  for (int m : {0, 2, 5}) {
    const double r1 = residual(m, 1e-3);
    const double r2 = residual(m, 0.5e-3);
    CHECK(r1 < 1e-3);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
  }
}
