#pragma once

#include <cmath>

#include "yangbax/elliptic.hpp"

namespace oracle {

// Incomplete integral of the first kind by adaptive Simpson.
inline double simpson(double (*f)(double, double), double k, double a, double b, double fa, double fm, double fb,
                      double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm, k), frm = f(rm, k);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
  return simpson(f, k, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson(f, k, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

inline double integrand(double t, double k) {
  const double s = std::sin(t);
  return 1.0 / std::sqrt(1.0 - k * k * s * s);
}

inline double incomplete_F(double phi, double k) {
  const double fa = integrand(0.0, k), fb = integrand(phi, k), fm = integrand(0.5 * phi, k);
  return simpson(integrand, k, 0.0, phi, fa, fm, fb, phi / 6.0 * (fa + 4.0 * fm + fb), 1e-14, 40);
}

// Amplitude phi with F(phi, k) = u, by Newton from phi = u.
inline double amplitude(double u, double k) {
  double phi = u;
  for (int i = 0; i < 50; ++i) {
    const double step = (incomplete_F(phi, k) - u) * std::sqrt(1.0 - k * k * std::sin(phi) * std::sin(phi));
    phi -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return phi;
}

inline yangbax::elliptic::JacobiValues jacobi(double u, double k) {
  const double phi = amplitude(u, k);
  const double s = std::sin(phi);
  return {s, std::cos(phi), std::sqrt(1.0 - k * k * s * s)};
}

}  // namespace oracle
