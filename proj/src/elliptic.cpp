#include "yangbax/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "yangbax/error.hpp"

namespace yangbax::elliptic {

namespace {

void check_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw Error("elliptic modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
}

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

}  // namespace

double complete_K(double k) {
  check_modulus(k);
  return std::numbers::pi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

double complete_K_prime(double k) {
  check_modulus(k);
  if (k == 0.0) return INFINITY;
  return std::numbers::pi / (2.0 * agm(1.0, k));
}

JacobiValues jacobi(double u, double k) {
  check_modulus(k);
  const double period = 4.0 * complete_K(k);
  u = std::remainder(u, period);

  std::vector<double> a{1.0};
  std::vector<double> c{k};
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  while (std::abs(c.back()) > 1e-15 && a.size() < 64) {
    const double an = 0.5 * (a.back() + b);
    const double cn = 0.5 * (a.back() - b);
    b = std::sqrt(a.back() * b);
    a.push_back(an);
    c.push_back(cn);
  }
  const std::size_t n = a.size() - 1;
  double phi = std::ldexp(a[n] * u, static_cast<int>(n));
  for (std::size_t i = n; i > 0; --i) phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));

  const double s = std::sin(phi);
  return {s, std::cos(phi), std::sqrt(1.0 - k * k * s * s)};
}

double sn(double u, double k) { return jacobi(u, k).sn; }
double cn(double u, double k) { return jacobi(u, k).cn; }
double dn(double u, double k) { return jacobi(u, k).dn; }

}  // namespace yangbax::elliptic
