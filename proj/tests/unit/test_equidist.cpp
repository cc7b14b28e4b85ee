#include <doctest.h>

#include <cmath>

#include "semiramsey/equidist.hpp"
#include "semiramsey/error.hpp"

using namespace semiramsey;

TEST_SUITE("equidist") {
  TEST_CASE("test functions") {
    CHECK(parse_test_function("one")(0.3) == 1.0);
    CHECK(parse_test_function("cos")(0.0) == doctest::Approx(1.0));
    CHECK(parse_test_function("sin:2")(0.125) == doctest::Approx(1.0));
    const auto ind = parse_test_function("ind:0.2:0.4:0.05");
    CHECK(ind(0.3) == 1.0);
    CHECK(ind(0.1) == 0.0);
    CHECK(ind.circle_average() == doctest::Approx(0.25).epsilon(1e-6));
    CHECK_THROWS_AS(parse_test_function("tan"), MalformedInput);
  }

  TEST_CASE("identity polynomial with f = 1") {
    const auto r = poly_equidistribution({0.0, 1.0}, parse_test_function("one"), 100.0);
    CHECK(r.time_average == doctest::Approx(1.0));
    CHECK(r.space_average == 1.0);
    CHECK(r.discrepancy == doctest::Approx(0.0));
  }

  TEST_CASE("irrational linear and quadratic flows") {
    const double s2 = std::sqrt(2.0);
    const auto lin = poly_equidistribution({0.0, s2}, parse_test_function("cos"), 1e6);
    CHECK(std::abs(lin.time_average) <= 0.01);
    CHECK(lin.space_average == 0.0);
    CHECK(lin.double_double);
    const auto quad = poly_equidistribution({0.3, 1.0, s2}, parse_test_function("sin"), 1e6);
    CHECK(quad.discrepancy <= 0.01);
  }

  TEST_CASE("degenerate input") {
    CHECK_THROWS_AS(poly_equidistribution({1.0}, parse_test_function("cos"), 10.0),
                    DegenerateLeadingCoefficient);
    CHECK_THROWS_AS(poly_equidistribution({1.0, 0.0}, parse_test_function("cos"), 10.0),
                    DegenerateLeadingCoefficient);
  }

  TEST_CASE("step never exceeds the quadrature bound") {
    const auto r = poly_equidistribution({0.0, 0.5}, parse_test_function("cos"), 10.0, 0.5);
    CHECK(r.step <= max_quadrature_step);
  }
}
