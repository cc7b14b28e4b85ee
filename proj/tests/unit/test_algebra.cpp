#include <doctest.h>

#include "semiramsey/algebra.hpp"
#include "semiramsey/error.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

namespace {

Table z4_add() {
  Table t(4, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) t[x][y] = (x + y) % 4;
  return t;
}

// Every semiring law, evaluated exhaustively in test code.
bool laws_hold(const FiniteSemiring& r) {
  const auto n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.mul(a, r.unit()) != a || r.mul(r.unit(), a) != a) return false;
    if (r.mul(a, r.zero()) != r.zero() || r.mul(r.zero(), a) != r.zero()) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return false;
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("boolean semiring and Z4 validate") {
    CHECK(validate_structure(FiniteSemiring::boolean()).valid);
    CHECK(validate_structure(FiniteSemiring::integers_mod(4)).valid);
    CHECK(FiniteSemiring::boolean().add(1, 1) == 1);
  }

  TEST_CASE("a corrupted addition entry is caught with a reproducible witness") {
    auto add = z4_add();
    add[1][2] = 0;
    const auto z4 = FiniteSemiring::integers_mod(4);
    const FiniteSemiring bad(add, z4.mul_table(), 0, 1);
    const auto report = validate_structure(bad);
    REQUIRE_FALSE(report.valid);
    REQUIRE_FALSE(report.violations.empty());
    for (const auto& v : report.violations) CHECK(reproduces(bad, v));
  }

  TEST_CASE("every single-entry corruption of Z4 is caught") {
    const auto z4 = FiniteSemiring::integers_mod(4);
    for (int which = 0; which < 2; ++which) {
      for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
          auto add = z4.add_table();
          auto mul = z4.mul_table();
          auto& cell = which == 0 ? add[x][y] : mul[x][y];
          cell = (cell + 1) % 4;
          const FiniteSemiring bad(add, mul, 0, 1);
          const auto report = validate_structure(bad);
          CHECK(report.valid == laws_hold(bad));
          for (const auto& v : report.violations) CHECK(reproduces(bad, v));
        }
      }
    }
  }

  TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(FiniteSemiring(Table{{0, 1}}, Table{{0, 0}, {0, 1}}, 0, 1), MalformedTable);
    CHECK_THROWS_AS(FiniteSemiring(Table{{0, 5}, {1, 0}}, Table{{0, 0}, {0, 1}}, 0, 1),
                    MalformedTable);
  }

  TEST_CASE("adjoining a zero to zero-free tables") {
    // The one-element tables {a}, a + a = a, a . a = a, have no zero apart
    // from a itself; adjoin_zero still appends a fresh absorbing element.
    const auto r = FiniteSemiring::adjoin_zero(Table{{0}}, Table{{0}}, 0);
    CHECK(r.size() == 2);
    CHECK(r.zero_adjoined());
    CHECK(r.add(r.zero(), 0) == 0);
    CHECK(r.mul(r.zero(), 0) == r.zero());
    CHECK(validate_structure(r).valid);
  }

  TEST_CASE("nil sets") {
    const auto b = FiniteSemiring::boolean();
    CHECK(nil_set(b, 1).empty());
    const auto z4 = FiniteSemiring::integers_mod(4);
    CHECK(nil_set(z4, 0) == std::vector<std::size_t>{0});
    CHECK(nil_set(z4, 1) == std::vector<std::size_t>{3});
  }

  TEST_CASE("star condition") {
    CHECK(check_star_condition(FiniteSemiring::boolean(), 2).holds);
    const auto z2 = check_star_condition(FiniteSemiring::integers_mod(2), 2);
    CHECK_FALSE(z2.holds);
    REQUIRE(z2.witness);
    CHECK(*z2.witness == std::vector<std::size_t>{0, 1});
    for (std::size_t k = 1; k < 6; ++k) {
      const auto w = check_star_condition(WindowedSemiring{NatWindow(100)}, k);
      CHECK(w.holds);
      CHECK(w.analytic);
    }
  }

  TEST_CASE("star condition is monotone in k") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = FiniteSemiring::integers_mod(n);
      for (std::size_t k = 2; k <= std::min<std::size_t>(4, n); ++k) {
        if (check_star_condition(r, k).holds) {
          for (std::size_t j = 1; j < k; ++j) CHECK(check_star_condition(r, j).holds);
        }
      }
    }
  }

  TEST_CASE("nil_set of zero always contains zero") {
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto r = FiniteSemiring::integers_mod(n);
      const auto z = nil_set(r, r.zero());
      CHECK(std::find(z.begin(), z.end(), r.zero()) != z.end());
    }
    const auto b = nil_set(FiniteSemiring::boolean(), 0);
    CHECK(std::find(b.begin(), b.end(), 0u) != b.end());
  }

  TEST_CASE("semimodules") {
    CHECK(validate_structure(FiniteSemimodule::boolean_semilattice()).valid);
    CHECK(validate_structure(FiniteSemimodule::regular(FiniteSemiring::integers_mod(5))).valid);
    auto m = FiniteSemimodule::regular(FiniteSemiring::integers_mod(3));
    Table action = m.action_table();
    action[1][1] = 0;  // 1 . 1 must be 1
    const FiniteSemimodule bad(m.ring(), m.add_table(), 0, action);
    const auto report = validate_structure(bad);
    CHECK_FALSE(report.valid);
    for (const auto& v : report.violations) CHECK(reproduces(bad, v));
  }

  TEST_CASE("windowed arithmetic matches 128-bit arithmetic") {
    gen::Rng rng(7);
    const Int bound = Int{1} << 40;
    const NatWindow w(bound);
    for (int i = 0; i < 100000; ++i) {
      const Int x = gen::uniform(rng, 0, bound);
      const Int y = gen::uniform(rng, 0, i % 2 ? bound : 1 << 20);
      const __int128 sum = static_cast<__int128>(x) + y;
      const __int128 prod = static_cast<__int128>(x) * y;
      if (sum <= bound) {
        CHECK(w.add(x, y) == static_cast<Int>(sum));
      } else {
        CHECK_THROWS_AS(w.add(x, y), Overflow);
      }
      if (prod <= bound) {
        CHECK(w.mul(x, y) == static_cast<Int>(prod));
      } else {
        CHECK_THROWS_AS(w.mul(x, y), Overflow);
      }
    }
  }

  TEST_CASE("vector windows and presets") {
    const VectorNat v(3, 10);
    CHECK(v.add({1, 2, 3}, {4, 5, 6}) == Point{5, 7, 9});
    CHECK(v.mul({1, 2, 3}, {2, 2, 2}) == Point{2, 4, 6});
    CHECK_THROWS_AS(v.add({9, 0, 0}, {2, 0, 0}), Overflow);
    CHECK(std::holds_alternative<NatWindow>(parse_windowed_semiring("nat:50")));
    CHECK(std::get<VectorNat>(parse_windowed_semiring("natvec:2:9")).dim() == 2);
    CHECK_THROWS_AS(parse_windowed_semiring("real:3"), MalformedInput);
    CHECK(nil_set(WindowedSemiring{VectorNat(2, 5)}, Point{0, 0}) == std::vector<Point>{{0, 0}});
    CHECK(nil_set(WindowedSemiring{VectorNat(2, 5)}, Point{1, 0}).empty());
  }

  TEST_CASE("sampled validation of windowed modules") {
    CHECK(validate_sampled(NatModule(50), 50, 10000, 1).valid);
    CHECK(validate_sampled(NatModule(7), 7, 10, 1).valid);
    CHECK(validate_sampled(NatVecModule(3, 40), 40, 10000, 2).valid);
  }
}
