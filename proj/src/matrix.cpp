#include "yangbax/matrix.hpp"

#include <utility>

namespace yangbax {

std::string to_string(Ansatz a) {
  switch (a) {
    case Ansatz::none: return "none";
    case Ansatz::five_vertex: return "five-vertex";
    case Ansatz::six_vertex: return "six-vertex";
    case Ansatz::eight_vertex: return "eight-vertex";
  }
  return "?";
}

namespace {

bool allowed_nonzero(Ansatz a, std::size_t r, std::size_t c) {
  if (a == Ansatz::none || r == c) return true;
  switch (a) {
    case Ansatz::five_vertex: return r == 1 && c == 2;
    case Ansatz::six_vertex: return (r == 1 && c == 2) || (r == 2 && c == 1);
    case Ansatz::eight_vertex:
      return (r == 1 && c == 2) || (r == 2 && c == 1) || (r == 0 && c == 3) || (r == 3 && c == 0);
    case Ansatz::none: break;
  }
  return true;
}

}  // namespace

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::with_ansatz(Ansatz a) const {
  if (a != Ansatz::none) {
    if constexpr (N != 4) {
      throw Error("ansatz tags apply to 4x4 vertex matrices only");
    } else {
      for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
          if (!allowed_nonzero(a, r, c) && !(*this)(r, c).is_zero(0.0)) {
            throw ConstraintViolation("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") must vanish in the " + to_string(a) + " ansatz");
          }
        }
      }
    }
  }
  SquareMatrix m = *this;
  m.tag_ = a;
  return m;
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::inverse() const {
  const Field f = field();
  SquareMatrix a = *this;
  SquareMatrix inv = identity(f);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = N;
    double best = 0.0;
    for (std::size_t r = col; r < N; ++r) {
      const Scalar& x = a(r, col);
      if (f == Field::rational) {
        if (!x.is_zero()) {
          pivot = r;
          break;
        }
      } else if (x.abs() > best) {
        best = x.abs();
        pivot = r;
      }
    }
    if (pivot == N || (f == Field::complex && best == 0.0)) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < N; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Scalar p = a(col, col);
    for (std::size_t c = 0; c < N; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const Scalar factor = a(r, col);
      if (factor.is_zero(0.0)) continue;
      for (std::size_t c = 0; c < N; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

template <std::size_t N>
Scalar SquareMatrix<N>::determinant() const {
  // Fraction-free elimination would be faster for large N; N <= 8 here.
  const Field f = field();
  SquareMatrix a = *this;
  Scalar det = Scalar::from_long(1, f);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = N;
    double best = 0.0;
    for (std::size_t r = col; r < N; ++r) {
      const Scalar& x = a(r, col);
      if (f == Field::rational) {
        if (!x.is_zero()) {
          pivot = r;
          break;
        }
      } else if (x.abs() > best) {
        best = x.abs();
        pivot = r;
      }
    }
    if (pivot == N || (f == Field::complex && best == 0.0)) return Scalar::from_long(0, f);
    if (pivot != col) {
      for (std::size_t c = 0; c < N; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    const Scalar p = a(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < N; ++r) {
      const Scalar factor = a(r, col) / p;
      if (factor.is_zero(0.0)) continue;
      for (std::size_t c = col; c < N; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

template class SquareMatrix<2>;
template class SquareMatrix<4>;
template class SquareMatrix<8>;

}  // namespace yangbax
