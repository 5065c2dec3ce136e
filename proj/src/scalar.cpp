#include "yangbax/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "yangbax/error.hpp"

namespace yangbax {

std::string_view to_string(Field f) { return f == Field::rational ? "rational" : "complex"; }

Field field_from_string(std::string_view s) {
  if (s == "rational") return Field::rational;
  if (s == "complex") return Field::complex;
  throw ParseError("unknown scalar mode '" + std::string(s) + "' (expected rational or complex)");
}

Scalar::Scalar(long n) : v_(Rational(n)) {}

Scalar::Scalar(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }

Scalar::Scalar(Complex z) : v_(z) {}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw SingularMatrix("rational with zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::complex(double re, double im) { return Scalar(Complex(re, im)); }

Scalar Scalar::from_long(long value, Field f) {
  return f == Field::rational ? Scalar(value) : Scalar::complex(static_cast<double>(value));
}

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ParseError("malformed rational '" + s + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("malformed rational '" + s + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw ParseError("malformed rational '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Scalar(Rational(num, den));
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Scalar(std::move(q));
}

const Scalar::Rational& Scalar::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  throw ScalarMismatch("expected an exact rational, got a complex value");
}

Scalar::Complex Scalar::to_complex() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return {q->get_d(), 0.0};
  return std::get<Complex>(v_);
}

Scalar Scalar::in_field(Field f) const {
  if (f == field()) return *this;
  if (f == Field::complex) return Scalar(to_complex());
  throw ScalarMismatch("cannot convert an approximate complex value to an exact rational");
}

bool Scalar::is_zero(double atol) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  return std::abs(std::get<Complex>(v_)) <= atol;
}

double Scalar::abs() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return std::fabs(q->get_d());
  return std::abs(std::get<Complex>(v_));
}

namespace {

[[noreturn]] void mismatch(const char* op) {
  throw ScalarMismatch(std::string("mixed rational/complex operands in '") + op + "'");
}

}  // namespace

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<Complex>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (field() != o.field()) mismatch("+");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q += std::get<Rational>(o.v_);
  } else {
    std::get<Complex>(v_) += std::get<Complex>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (field() != o.field()) mismatch("-");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q -= std::get<Rational>(o.v_);
  } else {
    std::get<Complex>(v_) -= std::get<Complex>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (field() != o.field()) mismatch("*");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q *= std::get<Rational>(o.v_);
  } else {
    std::get<Complex>(v_) *= std::get<Complex>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (field() != o.field()) mismatch("/");
  if (auto* q = std::get_if<Rational>(&v_)) {
    const auto& d = std::get<Rational>(o.v_);
    if (sgn(d) == 0) throw SingularMatrix("exact division by zero");
    *q /= d;
  } else {
    const auto d = std::get<Complex>(o.v_);
    if (d == Complex(0.0, 0.0)) throw SingularMatrix("division by complex zero");
    std::get<Complex>(v_) /= d;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) return false;
  if (a.is_exact()) return std::get<Scalar::Rational>(a.v_) == std::get<Scalar::Rational>(b.v_);
  return std::get<Scalar::Complex>(a.v_) == std::get<Scalar::Complex>(b.v_);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return q->get_str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<Complex>(v_);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool approx_equal(const Scalar& a, const Scalar& b, double atol) {
  if (a.field() != b.field()) mismatch("approx_equal");
  return (a - b).is_zero(atol);
}

Scalar inverse(const Scalar& s) { return Scalar::from_long(1, s.field()) / s; }

Scalar pow(const Scalar& s, long n) {
  if (n < 0) return pow(inverse(s), -n);
  Scalar result = Scalar::from_long(1, s.field());
  Scalar base = s;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Scalar pow(const Scalar& s, const Scalar& exponent) {
  if (exponent.is_exact() && exponent.as_rational().get_den() == 1) {
    const mpz_class& e = exponent.as_rational().get_num();
    if (!e.fits_slong_p()) throw Error("exponent out of range");
    return pow(s, e.get_si());
  }
  if (s.is_exact()) throw NoExactRoot("non-integer power of an exact rational");
  return Scalar(std::pow(s.to_complex(), exponent.to_complex()));
}

namespace {

bool exact_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

bool has_exact_sqrt(const Scalar& s) {
  if (!s.is_exact()) return true;
  mpq_class r;
  return exact_sqrt(s.as_rational(), r);
}

Scalar sqrt(const Scalar& s) {
  if (!s.is_exact()) return Scalar(std::sqrt(s.to_complex()));
  mpq_class r;
  if (!exact_sqrt(s.as_rational(), r)) {
    throw NoExactRoot("no exact rational square root of " + s.to_string());
  }
  return Scalar(std::move(r));
}

Scalar fourth_root(const Scalar& s) { return sqrt(sqrt(s)); }

}  // namespace yangbax
