#pragma once

namespace yangbax::elliptic {

/// Complete elliptic integral of the first kind, K(k) = pi / (2 AGM(1, k')).
/// Requires 0 <= k < 1; throws Error otherwise.
double complete_K(double k);

/// Complementary quarter period K'(k) = K(k').
double complete_K_prime(double k);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// Jacobi sn, cn, dn of modulus k (not parameter m = k^2) at real u.
/// The argument is reduced modulo 4K before the descending AGM ladder,
/// which runs until the modulus sequence drops below 1e-15.
JacobiValues jacobi(double u, double k);

double sn(double u, double k);
double cn(double u, double k);
double dn(double u, double k);

}  // namespace yangbax::elliptic
