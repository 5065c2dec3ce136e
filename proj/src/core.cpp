#include "yangbax/core.hpp"

#include <utility>

namespace yangbax {

const VertexMatrix& Triplet::operator[](std::size_t slot) const {
  switch (slot) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    default: throw Error("triplet slot out of range");
  }
}

VertexMatrix& Triplet::operator[](std::size_t slot) {
  return const_cast<VertexMatrix&>(std::as_const(*this)[slot]);
}

TripleSpaceMatrix embed(const VertexMatrix& m, SpacePair pair) {
  const Field f = m.field();
  TripleSpaceMatrix out = TripleSpaceMatrix::zero(f);
  const auto idx3 = [](int i1, int i2, int i3) { return static_cast<std::size_t>(4 * i1 + 2 * i2 + i3); };
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int j1 = 0; j1 < 2; ++j1)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int j3 = 0; j3 < 2; ++j3) {
              const Scalar* v = nullptr;
              switch (pair) {
                case SpacePair::s12:
                  if (i3 == j3) v = &m(2 * i1 + i2, 2 * j1 + j2);
                  break;
                case SpacePair::s13:
                  if (i2 == j2) v = &m(2 * i1 + i3, 2 * j1 + j3);
                  break;
                case SpacePair::s23:
                  if (i1 == j1) v = &m(2 * i2 + i3, 2 * j2 + j3);
                  break;
              }
              if (v != nullptr) out(idx3(i1, i2, i3), idx3(j1, j2, j3)) = *v;
            }
  return out;
}

TripleSpaceMatrix ybe_residual(const Triplet& t) {
  if (t.b.field() != t.a.field() || t.c.field() != t.a.field()) {
    throw ScalarMismatch("triplet mixes rational and complex matrices");
  }
  const TripleSpaceMatrix a12 = embed(t.a, SpacePair::s12);
  const TripleSpaceMatrix b13 = embed(t.b, SpacePair::s13);
  const TripleSpaceMatrix c23 = embed(t.c, SpacePair::s23);
  return a12 * b13 * c23 - c23 * b13 * a12;
}

TripleSpaceMatrix constant_ybe_residual(const VertexMatrix& r) { return ybe_residual(Triplet{r, r, r}); }

bool solves_ybe(const Triplet& t, double atol) { return ybe_residual(t).is_zero(atol); }

bool projective_eq(const Triplet& s, const Triplet& t, double atol) {
  return projective_eq(s.a, t.a, atol) && projective_eq(s.b, t.b, atol) && projective_eq(s.c, t.c, atol);
}

}  // namespace yangbax
