#pragma once

#include <optional>

#include "yangbax/matrix.hpp"

namespace yangbax {

/// Ordered (A, B, C). Need not solve the Yang-Baxter equation; the
/// symmetry groups act on arbitrary triplets.
struct Triplet {
  VertexMatrix a;
  VertexMatrix b;
  VertexMatrix c;

  Field field() const { return a.field(); }
  const VertexMatrix& operator[](std::size_t slot) const;
  VertexMatrix& operator[](std::size_t slot);
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Kronecker product: (M (x) N)[r_M * |N| + r_N][c_M * |N| + c_N] = M[r_M][c_M] * N[r_N][c_N].
template <std::size_t P, std::size_t Q>
SquareMatrix<P * Q> kron(const SquareMatrix<P>& m, const SquareMatrix<Q>& n) {
  if (m.field() != n.field()) throw ScalarMismatch("kron of matrices over different fields");
  SquareMatrix<P * Q> out;
  for (std::size_t r1 = 0; r1 < P; ++r1)
    for (std::size_t c1 = 0; c1 < P; ++c1)
      for (std::size_t r2 = 0; r2 < Q; ++r2)
        for (std::size_t c2 = 0; c2 < Q; ++c2) out(r1 * Q + r2, c1 * Q + c2) = m(r1, c1) * n(r2, c2);
  return out;
}

/// Pair of tensor factors a vertex matrix acts on inside V (x) V (x) V.
enum class SpacePair { s12, s13, s23 };

/// M_{12}, M_{13} or M_{23}: M acting on the named pair of factors and as
/// the identity on the remaining one.
TripleSpaceMatrix embed(const VertexMatrix& m, SpacePair pair);

/// A_{12} B_{13} C_{23} - C_{23} B_{13} A_{12}.
TripleSpaceMatrix ybe_residual(const Triplet& t);

/// ybe_residual with A = B = C = R.
TripleSpaceMatrix constant_ybe_residual(const VertexMatrix& r);

/// True if the residual vanishes: exactly in rational mode, max entry
/// magnitude <= atol in complex mode.
bool solves_ybe(const Triplet& t, double atol = kDefaultTolerance);

/// Index of the entry used to normalize M projectively: the first nonzero
/// entry in rational mode, the largest magnitude in complex mode. Empty if
/// M is zero.
template <std::size_t N>
std::optional<std::size_t> projective_pivot(const SquareMatrix<N>& m) {
  std::optional<std::size_t> pivot;
  double best = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) {
    const Scalar& x = m.entries()[i];
    if (m.field() == Field::rational) {
      if (!x.is_zero()) return i;
    } else if (x.abs() > best) {
      best = x.abs();
      pivot = i;
    }
  }
  return pivot;
}

/// True iff M = c N for some nonzero scalar c. Throws Error if both are zero
/// (the projective class is undefined).
template <std::size_t N>
bool projective_eq(const SquareMatrix<N>& m, const SquareMatrix<N>& n, double atol = kDefaultTolerance) {
  if (m.field() != n.field()) throw ScalarMismatch("projective_eq over different fields");
  const auto pm = projective_pivot(m);
  const auto pn = projective_pivot(n);
  if (!pm && !pn) throw Error("projective_eq: both matrices are zero");
  if (!pm || !pn) return false;
  const std::size_t p = *pm;
  const Scalar& mp = m.entries()[p];
  const Scalar& np = n.entries()[p];
  if (m.field() == Field::rational) {
    if (np.is_zero()) return false;
    for (std::size_t i = 0; i < N * N; ++i) {
      if (!(m.entries()[i] * np == n.entries()[i] * mp)) return false;
    }
    return true;
  }
  if (np.abs() <= atol * n.max_abs()) return false;
  for (std::size_t i = 0; i < N * N; ++i) {
    const Scalar diff = m.entries()[i] / mp - n.entries()[i] / np;
    if (diff.abs() > atol) return false;
  }
  return true;
}

/// Componentwise projective equality: each slot up to its own factor.
bool projective_eq(const Triplet& s, const Triplet& t, double atol = kDefaultTolerance);

/// M divided by its projective pivot entry.
template <std::size_t N>
SquareMatrix<N> projective_normal_form(const SquareMatrix<N>& m) {
  const auto p = projective_pivot(m);
  if (!p) throw Error("projective normal form of the zero matrix");
  return inverse(m.entries()[*p]) * m;
}

}  // namespace yangbax
