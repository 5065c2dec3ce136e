#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>

#include "yangbax/error.hpp"
#include "yangbax/scalar.hpp"

namespace yangbax {

/// Zero pattern a 4x4 vertex matrix is expected to follow.
enum class Ansatz {
  none,
  /// Six-vertex pattern with the (3,2) entry (flat (2,1)) also zero.
  five_vertex,
  /// Diagonal plus the central (2,3)/(3,2) pair.
  six_vertex,
  /// Six-vertex pattern plus the two anti-diagonal corners.
  eight_vertex,
};

std::string to_string(Ansatz a);

/// Dense N x N matrix over Scalar, stored row-major. All entries share one
/// field; operations between matrices of different fields throw
/// ScalarMismatch. Values are immutable in practice: every operation
/// returns a new matrix.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t size = N;

  /// Exact zero matrix.
  SquareMatrix() = default;

  SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    if (rows.size() != N) throw Error("wrong number of rows");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw Error("wrong number of columns");
      std::size_t c = 0;
      for (const auto& x : row) e_[r * N + c++] = x;
      ++r;
    }
    check_uniform_field();
  }

  static SquareMatrix zero(Field f) {
    SquareMatrix m;
    for (auto& x : m.e_) x = Scalar::from_long(0, f);
    return m;
  }

  static SquareMatrix identity(Field f) {
    SquareMatrix m = zero(f);
    for (std::size_t i = 0; i < N; ++i) m.e_[i * N + i] = Scalar::from_long(1, f);
    return m;
  }

  static SquareMatrix diagonal(const std::array<Scalar, N>& d) {
    SquareMatrix m = zero(d[0].field());
    for (std::size_t i = 0; i < N; ++i) m.e_[i * N + i] = d[i];
    m.check_uniform_field();
    return m;
  }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }

  const std::array<Scalar, N * N>& entries() const { return e_; }

  Field field() const { return e_[0].field(); }

  /// Throws ScalarMismatch if entries are not all in one field.
  void check_uniform_field() const {
    for (const auto& x : e_) {
      if (x.field() != e_[0].field()) throw ScalarMismatch("matrix mixes rational and complex entries");
    }
  }

  SquareMatrix in_field(Field f) const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = e_[i].in_field(f);
    m.tag_ = tag_;
    return m;
  }

  /// Advisory zero-pattern tag. Set via with_ansatz, which validates it.
  Ansatz ansatz() const { return tag_; }

  /// Copy tagged with `a`. Throws ConstraintViolation if an entry that the
  /// pattern requires to be zero is nonzero.
  SquareMatrix with_ansatz(Ansatz a) const;

  SquareMatrix operator-() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = -e_[i];
    return m;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m = zero(a.field());
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_exact() && aik.is_zero()) {
          if (!b(k, 0).is_exact()) throw ScalarMismatch("mixed rational/complex operands in '*'");
          continue;
        }
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }

  friend SquareMatrix operator*(const Scalar& s, const SquareMatrix& a) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = s * a.e_[i];
    return m;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.e_ == b.e_; }

  SquareMatrix transposed() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  /// Largest entry magnitude.
  double max_abs() const {
    double best = 0.0;
    for (const auto& x : e_) best = std::max(best, x.abs());
    return best;
  }

  /// All entries exactly zero (rational) or of magnitude <= atol (complex).
  bool is_zero(double atol = kDefaultTolerance) const {
    for (const auto& x : e_)
      if (!x.is_zero(atol)) return false;
    return true;
  }

  Scalar determinant() const;

  /// Gauss-Jordan inverse. Exact mode pivots on the first nonzero entry,
  /// complex mode on the largest magnitude. Throws SingularMatrix.
  SquareMatrix inverse() const;

 private:
  std::array<Scalar, N * N> e_{};
  Ansatz tag_ = Ansatz::none;
};

using Mat2 = SquareMatrix<2>;
/// 4x4 matrix acting on V (x) V. Row index r = 2(i-1) + (j-1) for the
/// double index (i, j), i.e. the left index selects the 2x2 block.
using VertexMatrix = SquareMatrix<4>;
/// 8x8 matrix acting on V (x) V (x) V, r = 4(i1-1) + 2(i2-1) + (i3-1).
using TripleSpaceMatrix = SquareMatrix<8>;

/// Flat row/column index of the double index (i, j), i, j in {1, 2}.
constexpr std::size_t pair_index(int i, int j) { return static_cast<std::size_t>(2 * (i - 1) + (j - 1)); }

/// Entry R^{ij}_{kl} of a vertex matrix, indices in {1, 2}.
inline const Scalar& double_index(const VertexMatrix& m, int i, int j, int k, int l) {
  return m(pair_index(i, j), pair_index(k, l));
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<N>& m) {
  os << '[';
  for (std::size_t r = 0; r < N; ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < N; ++c) os << (c == 0 ? "" : ", ") << m(r, c);
    os << ']';
  }
  return os << ']';
}

extern template class SquareMatrix<2>;
extern template class SquareMatrix<4>;
extern template class SquareMatrix<8>;

}  // namespace yangbax
