#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace yangbax {

/// Absolute tolerance used by approximate comparisons unless overridden.
inline constexpr double kDefaultTolerance = 1e-10;

enum class Field { rational, complex };

std::string_view to_string(Field f);
Field field_from_string(std::string_view s);

/// A field element: either an exact arbitrary-precision rational or an
/// approximate complex double. Arithmetic never mixes the two; doing so
/// throws ScalarMismatch.
class Scalar {
 public:
  using Rational = mpq_class;
  using Complex = std::complex<double>;

  /// Exact zero.
  Scalar() = default;
  Scalar(long n);  // NOLINT(google-explicit-constructor): integer literals are exact
  explicit Scalar(Rational q);
  explicit Scalar(Complex z);

  static Scalar rational(long num, long den = 1);
  static Scalar complex(double re, double im = 0.0);
  /// `value` converted into field `f` (rational -> complex is lossy).
  static Scalar from_long(long value, Field f);
  /// Parses "p", "p/q", or a decimal such as "-0.25" as an exact rational.
  static Scalar parse_rational(std::string_view text);

  Field field() const { return std::holds_alternative<Rational>(v_) ? Field::rational : Field::complex; }
  bool is_exact() const { return field() == Field::rational; }

  /// Throws ScalarMismatch if not exact.
  const Rational& as_rational() const;
  /// Complex value; rationals are rounded to double.
  Complex to_complex() const;
  /// Same value in field `f`. Complex -> rational is refused.
  Scalar in_field(Field f) const;

  /// Exactly zero (rational) or |z| <= atol (complex).
  bool is_zero(double atol = kDefaultTolerance) const;
  /// Magnitude as a double.
  double abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws SingularMatrix on exact division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality for rationals, bitwise equality for complex values.
  /// Use approx_equal for tolerance-based comparison.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "p" or "p/q" in lowest terms, or "(re,im)".
  std::string to_string() const;

 private:
  std::variant<Rational, Complex> v_{Rational(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// |a - b| <= atol in complex mode; exact equality in rational mode.
bool approx_equal(const Scalar& a, const Scalar& b, double atol = kDefaultTolerance);

Scalar inverse(const Scalar& s);
/// Integer power; negative exponents invert.
Scalar pow(const Scalar& s, long n);
/// Principal power with a real exponent (complex mode only unless the
/// exponent is an integer).
Scalar pow(const Scalar& s, const Scalar& exponent);
/// Principal square root in complex mode. In rational mode the value must
/// be a perfect square; the non-negative root is returned, otherwise
/// NoExactRoot is thrown.
Scalar sqrt(const Scalar& s);
/// sqrt(sqrt(s)) with the same branch policy.
Scalar fourth_root(const Scalar& s);
/// True if sqrt() would succeed.
bool has_exact_sqrt(const Scalar& s);

}  // namespace yangbax
