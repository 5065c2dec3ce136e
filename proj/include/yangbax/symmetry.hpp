#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yangbax/core.hpp"

namespace yangbax {

// Elementary operations on a single vertex matrix. With R^{ij}_{kl} the
// entry at row (i,j), column (k,l):
//   (t R)^{ij}_{kl}   = R^{kl}_{ij}
//   (t_l R)^{ij}_{kl} = R^{kj}_{il}
//   (t_r R)^{ij}_{kl} = R^{il}_{kj}

/// Matrix inverse with the normalization factor fixed to 1. Comparisons
/// downstream are projective, so any other normalization is equivalent.
VertexMatrix projective_inverse(const VertexMatrix& m);
VertexMatrix transpose_full(const VertexMatrix& m);
VertexMatrix transpose_left(const VertexMatrix& m);
VertexMatrix transpose_right(const VertexMatrix& m);

/// Generators of the inversion group.
enum class Generator { ka, kb, kc };

char to_char(Generator g);
Generator generator_from_char(char c);

/// Order in which the composite t_r I t_l acting on the B slot of K_b is
/// applied. right_to_left means t_r(I(t_l(B))).
enum class Composition { right_to_left, left_to_right };

/// K_a: (tI A, t_l B, t_l C)
/// K_b: (t_l A, t_r I t_l B, t_r C)
/// K_c: (t_r A, t_r B, tI C)
/// Throws SingularMatrix when an inverse is needed of a singular matrix.
Triplet apply_K(Generator gen, const Triplet& t, Composition order = Composition::right_to_left);

/// Free word in {K_a, K_b, K_c}, applied left to right.
using AutWord = std::vector<Generator>;

/// Parses "a,b,c" (commas optional, case-insensitive, "Ka" accepted).
AutWord parse_word(std::string_view text);
std::string to_string(const AutWord& w);

Triplet apply_aut_word(const AutWord& w, const Triplet& t);

struct OrbitResult {
  /// Smallest p such that point n equals point n - p (projectively,
  /// componentwise), if found within max_iter steps.
  std::optional<std::size_t> period;
  /// Index n - p of the repeated point when a period was found.
  std::optional<std::size_t> cycle_start;
  /// points[0] is the starting triplet; points[n] is after n steps. The
  /// trajectory stops at the first repeat.
  std::vector<Triplet> points;
};

inline constexpr std::size_t kDefaultOrbitIterations = 512;

/// Iterates `step`, comparing each new point to every previous one.
/// Rational mode compares projective normal forms exactly; complex mode
/// compares within atol.
OrbitResult orbit(const Triplet& t, const AutWord& step, std::size_t max_iter = kDefaultOrbitIterations,
                  double atol = kDefaultTolerance);

/// Element of SL(2) x SL(2) x SL(2).
class GaugeElement {
 public:
  /// Throws ConstraintViolation unless det g_i = 1 (exactly, or within atol).
  GaugeElement(Mat2 g1, Mat2 g2, Mat2 g3, double atol = kDefaultTolerance);

  static GaugeElement identity(Field f);

  const Mat2& g1() const { return g_[0]; }
  const Mat2& g2() const { return g_[1]; }
  const Mat2& g3() const { return g_[2]; }
  const Mat2& operator[](std::size_t i) const { return g_.at(i); }
  Field field() const { return g_[0].field(); }

 private:
  std::array<Mat2, 3> g_;
};

/// Diagonal subgroup element (diag(t_i, 1/t_i))_i.
struct DiagonalGauge {
  Scalar t1;
  Scalar t2;
  Scalar t3;

  /// Throws ConstraintViolation if some t_i vanishes.
  GaugeElement to_gauge() const;
};

/// A -> (g1 (x) g2)^-1 A (g1 (x) g2), B -> (g1 (x) g3)^-1 B (g1 (x) g3),
/// C -> (g2 (x) g3)^-1 C (g2 (x) g3).
Triplet apply_gauge(const GaugeElement& g, const Triplet& t);

/// The gauge element g' with K . g = g' . K, i.e.
/// apply_K(gen, apply_gauge(g, T)) ~ apply_gauge(g', apply_K(gen, T)).
/// Every factor on which the generator transposes is replaced by its
/// inverse transpose:
///   K_a: (g1^-T, g2^-T, g3), K_b: (g1^-T, g2, g3^-T), K_c: (g1, g2^-T, g3^-T).
GaugeElement conjugate_gauge(Generator gen, const GaugeElement& g);

}  // namespace yangbax
