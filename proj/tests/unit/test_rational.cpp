#include <doctest.h>

#include "eskel/error.hpp"
#include "eskel/rational.hpp"

using namespace eskel;

TEST_CASE("rational literals parse to lowest terms") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Scalar(-3, 2));
  CHECK(parse_rational(" +10/5 ") == 2);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("123456789012345678901234567890/3") == Scalar(mpz_class("41152263004115226300411522630")));
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "--1", "1/-2", "1e3"})
    CHECK_THROWS_AS(parse_rational(bad), MalformedInput);
}

TEST_CASE("vector formatting") {
  Vector v{1, Scalar(-1, 2), 0};
  CHECK(to_compact_string(v) == "1,-1/2,0");
  CHECK(to_string(v) == "(1, -1/2, 0)");
}

TEST_CASE("encoding length counts sign, numerator and denominator bits") {
  CHECK(encoding_length(Scalar(0)) == 2);
  CHECK(encoding_length(Scalar(1)) == 3);
  CHECK(encoding_length(Scalar(-5, 3)) == 1 + 3 + 2);
  CHECK(encoding_length(Vector{1, 1}) == 6);
}

TEST_CASE("vector arithmetic") {
  Vector a{1, 2}, b{Scalar(1, 2), -1};
  CHECK(dot(a, b) == Scalar(-3, 2));
  CHECK(add(a, b) == Vector{Scalar(3, 2), 1});
  CHECK(sub(a, b) == Vector{Scalar(1, 2), 3});
  CHECK(add_scaled(a, 2, b) == Vector{2, 0});
  CHECK(negated(a) == Vector{-1, -2});
  CHECK(is_zero(zeros(3)));
  CHECK(unit_vector(3, 1) == Vector{0, 1, 0});
  CHECK(is_integral(a));
  CHECK_FALSE(is_integral(b));
  CHECK_THROWS_AS(dot(a, Vector{1}), MalformedInput);
  CHECK_THROWS_AS(require_dimension(a, 3, "x"), MalformedInput);
}
