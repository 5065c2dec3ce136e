#include "yangbax/invariants.hpp"

namespace yangbax {

PVector p_polys(const VertexMatrix& m) {
  const auto X = [&](int r, int c) -> const Scalar& { return m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)); };
  const Scalar d12 = X(1, 1) * X(2, 2);
  const Scalar d34 = X(3, 3) * X(4, 4);
  const Scalar d13 = X(1, 1) * X(3, 3);
  const Scalar d24 = X(2, 2) * X(4, 4);
  return {d12 + d34, d12 - d34, d13 + d24, d13 - d24,
          X(1, 1) * X(4, 4) + X(2, 2) * X(3, 3) - X(2, 3) * X(3, 2) - X(1, 4) * X(4, 1)};
}

SixVertexInvariants six_vertex_invariants(const VertexMatrix& m, double atol) {
  const PVector p = p_polys(m);
  SixVertexInvariants out;
  if (!p.p9.is_zero(atol)) out.Delta = (p.p1 * p.p1 - p.p2 * p.p2) / (p.p9 * p.p9);
  if (!(p.p1 - p.p2).is_zero(atol)) out.delta = (p.p1 + p.p2) / (p.p1 - p.p2);
  if (!(p.p5 + p.p6).is_zero(atol)) out.delta_prime = (p.p5 - p.p6) / (p.p5 + p.p6);
  return out;
}

EightVertexInvariants eight_vertex_invariants_from_params(const EightVertexParams& p) {
  const Scalar xyz = p.x * p.y * p.z;
  if (xyz.is_zero(0.0)) throw ConstraintViolation("xyz = 0: eight-vertex invariants undefined");
  const Scalar& v = p.v;
  const Scalar two = Scalar::from_long(2, p.field());
  return {v * (two * v - xyz - p.x - p.y - p.z) / xyz,
          (v - p.x) * (v - p.y) * (v - p.z) * (v - xyz) / (xyz * xyz)};
}

EightVertexInvariants eight_vertex_invariants_from_matrix(const VertexMatrix& m, double atol) {
  const PVector p = p_polys(m);
  if (p.p5.is_zero(atol)) throw ConstraintViolation("p5 = 0: Delta1 undefined");
  const Scalar diag = m(0, 0) * m(1, 1) * m(2, 2) * m(3, 3);
  if (diag.is_zero(atol)) throw ConstraintViolation("a diagonal entry vanishes: Delta2 undefined");
  const Scalar anti = m(0, 3) * m(1, 2) * m(2, 1) * m(3, 0);
  return {Scalar::from_long(-2, m.field()) * p.p9 / p.p5, anti / diag};
}

bool is_free_fermion(const VertexMatrix& m, double tol) {
  const Scalar p9 = p_polys(m).p9;
  if (m.field() == Field::rational) return p9.is_zero();
  const double scale = m.max_abs();
  return p9.abs() <= tol * scale * scale;
}

}  // namespace yangbax
