#pragma once

#include <string>
#include <vector>

namespace semiramsey {

// Test functions on the circle R/Z.
struct TestFunction {
  enum class Kind { one, cos, sin, smooth_indicator };
  Kind kind = Kind::one;
  int frequency = 1;  // cos / sin: 2 pi k theta
  // smooth_indicator: 1 on [a, b], 0 outside [a - w, b + w], cosine ramps.
  double a = 0.25, b = 0.75, width = 0.05;

  double operator()(double theta) const;
  double circle_average() const;  // exact for the trigonometric kinds
};

// "one", "cos", "sin", "cos:k", "sin:k", "ind:a:b:w".
TestFunction parse_test_function(const std::string& text);

struct EquidistributionResult {
  double time_average = 0.0;
  double space_average = 0.0;
  double discrepancy = 0.0;  // |time - space|
  std::size_t samples = 0;
  double step = 0.0;
  bool double_double = false;
};

inline constexpr double max_quadrature_step = 1e-2;

// (1/T) int_0^T f(frac(p(x))) dx by the composite midpoint rule with step
// <= min(step, 1e-2). coeffs are a_0, a_1, ..., a_d (ascending); the leading
// one must be nonzero and d >= 1. From T >= 1e5 on, p is evaluated in
// double-double arithmetic before frac().
EquidistributionResult poly_equidistribution(const std::vector<double>& coeffs,
                                             const TestFunction& f, double T,
                                             double step = max_quadrature_step);

}  // namespace semiramsey
