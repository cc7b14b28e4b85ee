#include <doctest.h>

#include "semiramsey/symbolic.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

namespace {

std::vector<Int> color_class(const NatColoring& c, int j) {
  std::vector<Int> out;
  const auto w = c.window().range;
  for (Int x = w.lo; x <= w.hi; ++x)
    if (c.color_of(x) == j) out.push_back(x);
  return out;
}

}  // namespace

TEST_SUITE("symbolic") {
  TEST_CASE("alternating coloring") {
    std::string digits;
    for (int i = 0; i < 20; ++i) digits += i % 2 ? '2' : '1';
    const auto c = nat_coloring_from_digits(Interval{0, 19}, 2, digits);
    const auto r = furstenberg_subshift(c, 4, true);
    CHECK(r.subshift.nodes.size() == 2);
    CHECK(r.certificate.recurrent_class.size() == 2);
    CHECK(r.certificate.S == color_class(c, r.certificate.color));
    CHECK(r.certificate.exact);
    CHECK(verify_weak_central(c, r));
  }

  TEST_CASE("one 2 followed by ones settles on the constant pattern") {
    const auto c = nat_coloring_from_digits(Interval{0, 19}, 2, "2" + std::string(19, '1'));
    const auto r = furstenberg_subshift(c, 3, false);
    CHECK(r.certificate.color == 1);
    CHECK(r.certificate.eta == std::vector<int>{1, 1, 1});
    CHECK(r.certificate.S == color_class(c, 1));
    CHECK_FALSE(r.certificate.exact);
    CHECK(verify_weak_central(c, r));
  }

  TEST_CASE("constant coloring") {
    const auto c = nat_coloring_from_digits(Interval{0, 9}, 3, std::string(10, '3'));
    const auto r = furstenberg_subshift(c, 2, true);
    CHECK(r.certificate.color == 3);
    CHECK(r.certificate.S.size() == 10);
  }

  TEST_CASE("window shorter than the shape") {
    const auto c = nat_coloring_from_digits(Interval{0, 2}, 2, "121");
    CHECK_THROWS_AS(furstenberg_subshift(c, 3, false), WindowTooSmall);
  }

  TEST_CASE("returned S is the color class on random colorings") {
    gen::Rng rng(51);
    for (int i = 0; i < 300; ++i) {
      const int q = static_cast<int>(gen::uniform(rng, 1, 3));
      const auto c = gen::coloring(rng, 0, static_cast<std::size_t>(gen::uniform(rng, 12, 60)), q);
      const auto shape = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      try {
        const auto r = furstenberg_subshift(c, shape, false);
        CHECK(r.certificate.S == color_class(c, r.certificate.color));
        CHECK(verify_weak_central(c, r));
      } catch (const WindowTooSmall&) {
        // Allowed only when no recurrent class fits; a cycle always exists
        // once the window holds more than q^shape + shape cells.
        Int words = 1;
        for (std::size_t k = 0; k < shape; ++k) words *= q;
        CHECK(c.window().range.size() <= words + static_cast<Int>(shape));
      }
    }
  }

  TEST_CASE("piecewise syndetic") {
    std::vector<Int> evens;
    for (Int x = 0; x <= 100; x += 2) evens.push_back(x);
    CHECK(piecewise_syndetic_check(evens, Interval{0, 100}, 2, 50).holds);
    std::vector<Int> powers;
    for (Int i = 0; i <= 10; ++i) powers.push_back(Int{1} << i);
    CHECK_FALSE(piecewise_syndetic_check(powers, Interval{0, 1024}, 2, 10).holds);
    std::vector<Int> planted{3, 17, 90, 130};
    for (Int x = 40; x <= 60; ++x) planted.push_back(x);
    const auto r = piecewise_syndetic_check(planted, Interval{0, 150}, 1, 20);
    CHECK(r.holds);
    REQUIRE(r.witness);
    CHECK(*r.witness == Interval{40, 60});
  }

  TEST_CASE("syndetic sets pass the piecewise check for every L") {
    gen::Rng rng(52);
    for (int i = 0; i < 150; ++i) {
      const Interval w{0, gen::uniform(rng, 20, 120)};
      const auto S = gen::subset(rng, w, 1, 2);
      if (S.empty()) continue;
      const auto cert = min_gap_certificate(S, w);
      const auto k = static_cast<Int>(cert.K.size());
      // The min-gap K covers the leading and trailing runs too, so every
      // k-block of the window meets S.
      const auto L = gen::uniform(rng, 1, w.size());
      CHECK(piecewise_syndetic_check(S, w, k, L).holds);
    }
  }
}
