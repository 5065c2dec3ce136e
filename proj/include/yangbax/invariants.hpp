#pragma once

#include <optional>
#include <string>

#include "yangbax/core.hpp"

namespace yangbax {

/// Coordinates (a, b, c, x, y, z, v) of the seven-parameter eight-vertex
/// solution. x, y, z, v are gauge invariant; a, b, c are moved by the
/// diagonal gauge.
struct EightVertexParams {
  Scalar a{1};
  Scalar b{1};
  Scalar c{1};
  Scalar x;
  Scalar y;
  Scalar z;
  Scalar v;

  Field field() const { return x.field(); }
  friend bool operator==(const EightVertexParams&, const EightVertexParams&) = default;
};

/// The five quadratics that survive on the six- and eight-vertex patterns.
/// With X_rc the 1-based flat entries:
///
///   p1 = X11 X22 + X33 X44      p5 = X11 X33 + X22 X44
///   p2 = X11 X22 - X33 X44      p6 = X11 X33 - X22 X44
///   p9 = X11 X44 + X22 X33 - X23 X32 - X14 X41
///
/// The X14 X41 term vanishes on six-vertex matrices.
struct PVector {
  Scalar p1;
  Scalar p2;
  Scalar p5;
  Scalar p6;
  Scalar p9;
};

PVector p_polys(const VertexMatrix& m);

/// Each ratio is empty when its denominator vanishes: Delta when p9 = 0
/// (free fermion), delta when p1 = p2, delta_prime when p5 = -p6.
struct SixVertexInvariants {
  std::optional<Scalar> Delta;        ///< (p1^2 - p2^2) / p9^2
  std::optional<Scalar> delta;        ///< (p1 + p2) / (p1 - p2)
  std::optional<Scalar> delta_prime;  ///< (p5 - p6) / (p5 + p6)
};

SixVertexInvariants six_vertex_invariants(const VertexMatrix& m, double atol = kDefaultTolerance);

struct EightVertexInvariants {
  Scalar Delta1;
  Scalar Delta2;
};

/// Delta1 = v (2v - xyz - x - y - z) / (xyz)
/// Delta2 = (v - x)(v - y)(v - z)(v - xyz) / (xyz)^2
/// Throws ConstraintViolation if xyz = 0.
EightVertexInvariants eight_vertex_invariants_from_params(const EightVertexParams& p);

/// Delta1 = -2 p9 / p5, Delta2 = (X14 X23 X32 X41) / (X11 X22 X33 X44).
/// Throws ConstraintViolation on a vanishing denominator.
EightVertexInvariants eight_vertex_invariants_from_matrix(const VertexMatrix& m, double atol = kDefaultTolerance);

inline constexpr double kFreeFermionTolerance = 1e-9;

/// p9 = 0 exactly, or |p9| <= tol * max|M_rc|^2 in complex mode.
bool is_free_fermion(const VertexMatrix& m, double tol = kFreeFermionTolerance);

}  // namespace yangbax
