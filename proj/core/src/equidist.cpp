#include "semiramsey/equidist.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "semiramsey/error.hpp"

namespace semiramsey {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DD {
  double hi = 0.0, lo = 0.0;
};

DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DD add(DD a, double c) {
  DD s = two_sum(a.hi, c);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

// frac(hi + lo) in [0, 1); hi - floor(hi) is exact.
double frac(DD v) {
  double r = (v.hi - std::floor(v.hi)) + v.lo;
  r -= std::floor(r);
  return r >= 1.0 ? 0.0 : r;
}

double frac(double v) { return v - std::floor(v); }

double ramp(double u) { return 0.5 * (1.0 - std::cos(std::numbers::pi * u)); }

}  // namespace

double TestFunction::operator()(double theta) const {
  switch (kind) {
    case Kind::one:
      return 1.0;
    case Kind::cos:
      return std::cos(two_pi * frequency * theta);
    case Kind::sin:
      return std::sin(two_pi * frequency * theta);
    case Kind::smooth_indicator: {
      const double t = theta - std::floor(theta);
      if (t < a - width || t > b + width) return 0.0;
      if (t < a) return ramp((t - (a - width)) / width);
      if (t > b) return ramp((b + width - t) / width);
      return 1.0;
    }
  }
  return 0.0;
}

double TestFunction::circle_average() const {
  switch (kind) {
    case Kind::one:
      return 1.0;
    case Kind::cos:
    case Kind::sin:
      return 0.0;
    case Kind::smooth_indicator:
      return (b - a) + width;
  }
  return 0.0;
}

TestFunction parse_test_function(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  TestFunction f;
  auto num = [&](std::size_t i) {
    try {
      return std::stod(parts.at(i));
    } catch (const std::exception&) {
      throw MalformedInput("bad number in test function '" + text + "'");
    }
  };
  if (parts.empty()) throw MalformedInput("empty test function");
  if (parts[0] == "one" && parts.size() == 1) {
    f.kind = TestFunction::Kind::one;
  } else if ((parts[0] == "cos" || parts[0] == "sin") && parts.size() <= 2) {
    f.kind = parts[0] == "cos" ? TestFunction::Kind::cos : TestFunction::Kind::sin;
    if (parts.size() == 2) f.frequency = static_cast<int>(num(1));
    if (f.frequency == 0) throw MalformedInput("frequency must be nonzero");
  } else if (parts[0] == "ind" && parts.size() == 4) {
    f.kind = TestFunction::Kind::smooth_indicator;
    f.a = num(1);
    f.b = num(2);
    f.width = num(3);
    if (!(f.width > 0) || f.a - f.width < 0 || f.b + f.width > 1 || f.a > f.b) {
      throw MalformedInput("indicator needs 0 <= a - w, a <= b, b + w <= 1, w > 0");
    }
  } else {
    throw MalformedInput("unknown test function '" + text + "' (one, cos[:k], sin[:k], ind:a:b:w)");
  }
  return f;
}

EquidistributionResult poly_equidistribution(const std::vector<double>& coeffs,
                                             const TestFunction& f, double T, double step) {
  if (coeffs.size() < 2 || coeffs.back() == 0.0) throw DegenerateLeadingCoefficient();
  if (!(T > 0)) throw MalformedInput("horizon T must be positive");
  if (!(step > 0)) throw MalformedInput("quadrature step must be positive");

  EquidistributionResult r;
  const double target = std::min(step, max_quadrature_step);
  const auto n = static_cast<std::size_t>(std::ceil(T / target));
  const double h = T / static_cast<double>(n);
  r.samples = n;
  r.step = h;
  r.double_double = T >= 1e5;

  double total = 0.0;
  double block = 0.0;
  constexpr std::size_t block_size = 4096;
  for (std::size_t i = 0; i < n; ++i) {
    const double mid = static_cast<double>(i) + 0.5;
    double theta;
    if (r.double_double) {
      const DD x = two_prod(mid, h);
      DD acc{coeffs.back(), 0.0};
      for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = add(mul(acc, x), coeffs[j]);
      theta = frac(acc);
    } else {
      const double x = mid * h;
      double acc = coeffs.back();
      for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * x + coeffs[j];
      theta = frac(acc);
    }
    block += f(theta);
    if ((i + 1) % block_size == 0) {
      total += block;
      block = 0.0;
    }
  }
  total += block;
  r.time_average = total / static_cast<double>(n);
  r.space_average = f.circle_average();
  r.discrepancy = std::abs(r.time_average - r.space_average);
  return r;
}

}  // namespace semiramsey
