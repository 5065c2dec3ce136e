#include <doctest.h>

#include <cmath>

#include "yangbax/error.hpp"
#include "yangbax/matrix.hpp"

using namespace yangbax;

TEST_CASE("rational arithmetic stays exact") {
  const Scalar a = Scalar::rational(1, 3);
  const Scalar b = Scalar::rational(1, 6);
  CHECK(a + b == Scalar::rational(1, 2));
  CHECK(a * b == Scalar::rational(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK((a - a).is_zero(0.0));
  CHECK(pow(Scalar::rational(2, 3), -2) == Scalar::rational(9, 4));
}

TEST_CASE("parse_rational") {
  CHECK(Scalar::parse_rational("-46/45") == Scalar::rational(-46, 45));
  CHECK(Scalar::parse_rational("7") == Scalar(7));
  CHECK(Scalar::parse_rational("4/6") == Scalar::rational(2, 3));
  CHECK_THROWS_AS(Scalar::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse_rational("abc"), ParseError);
}

TEST_CASE("mixing realizations is an error") {
  CHECK_THROWS_AS(Scalar(1) + Scalar::complex(1.0), ScalarMismatch);
  CHECK_NOTHROW(Scalar(1).in_field(Field::complex) + Scalar::complex(1.0));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), SingularMatrix);
}

TEST_CASE("exact roots") {
  CHECK(sqrt(Scalar::rational(9, 4)) == Scalar::rational(3, 2));
  CHECK(fourth_root(Scalar(16)) == Scalar(2));
  CHECK_THROWS_AS(sqrt(Scalar(2)), NoExactRoot);
  CHECK(has_exact_sqrt(Scalar::rational(25, 49)));
  CHECK_FALSE(has_exact_sqrt(Scalar(-4)));
  const Scalar r = sqrt(Scalar::complex(-4.0));
  CHECK(approx_equal(r, Scalar::complex(0.0, 2.0)));
}

TEST_CASE("complex tolerance") {
  CHECK(Scalar::complex(1e-12).is_zero());
  CHECK_FALSE(Scalar::complex(1e-8).is_zero());
  CHECK(approx_equal(Scalar::complex(std::sqrt(2.0)) * Scalar::complex(std::sqrt(2.0)), Scalar::complex(2.0)));
}

TEST_CASE("matrix inverse and determinant") {
  const Mat2 m{{2, 3}, {1, 2}};
  CHECK(m.determinant() == Scalar(1));
  CHECK(m * m.inverse() == Mat2::identity(Field::rational));
  const Mat2 s{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(s.inverse(), SingularMatrix);
  VertexMatrix v = VertexMatrix::diagonal({1, 2, 3, 4});
  CHECK(v.determinant() == Scalar(24));
  CHECK(v.inverse()(3, 3) == Scalar::rational(1, 4));
}

TEST_CASE("double index convention") {
  VertexMatrix m = VertexMatrix::zero(Field::rational);
  m(1, 2) = 5;
  CHECK(double_index(m, 1, 2, 2, 1) == Scalar(5));
  CHECK(pair_index(2, 2) == 3);
}
