#pragma once
// Independent reference evaluations for the tests: direct quadrature of the
// pair correlation rather than the closed forms used by the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

// \int_0^R g(r) 4 pi r^2 dr in the variable t = r sqrt(w/2), split so every
// panel sees a smooth, well-resolved integrand.
inline double sphere_fraction_quadrature(double x) {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [](double t) { return 4.0 / std::sqrt(std::numbers::pi) * t * t * std::exp(-t * t); };
  const double top = std::min(x, 12.0);
  double sum = 0.0;
  double a = 0.0;
  const int panels = top < 1.0 ? 1 : static_cast<int>(std::ceil(top));
  for (int i = 1; i <= panels; ++i) {
    const double b = top * i / panels;
    sum += gauss_kronrod<double, 61>::integrate(integrand, a, b, 15, 1e-15);
    a = b;
  }
  return sum;
}

// \int_0^inf g(r) 4 pi r^2 dr for the harmonic-model pair correlation.
inline double g_normalization(double w) {
  using boost::math::quadrature::gauss_kronrod;
  const double scale = 1.0 / std::sqrt(w);
  auto g = [w](double r) {
    return std::pow(w / (2.0 * std::numbers::pi), 1.5) * std::exp(-0.5 * w * r * r) * 4.0 *
           std::numbers::pi * r * r;
  };
  double sum = 0.0;
  for (int i = 0; i < 12; ++i)
    sum += gauss_kronrod<double, 61>::integrate(g, i * scale, (i + 1) * scale, 15, 1e-15);
  return sum;
}

}  // namespace oracle
