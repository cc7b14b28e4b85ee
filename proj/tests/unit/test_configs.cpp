#include <doctest.h>

#include <set>

#include "semiramsey/configs.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

namespace {

// Double loop over (d, a): the reference count of copies inside [lo, hi].
std::size_t naive_copy_count(const std::vector<Int>& F, Interval w, Interval d_range) {
  std::size_t count = 0;
  for (Int d = d_range.lo; d <= d_range.hi; ++d) {
    for (Int a = w.lo; a <= w.hi; ++a) {
      bool inside = true;
      for (Int f : F) inside = inside && w.contains(a + d * f);
      count += inside ? 1 : 0;
    }
  }
  return count;
}

std::vector<Int> range_vec(Int lo, Int hi) { return to_vector(Interval{lo, hi}); }

}  // namespace

TEST_SUITE("configs") {
  TEST_CASE("realize_copy") {
    const NatModule m;
    CHECK(realize_copy(m, Int{0}, Int{1}, ConfigSet<Int>({7})).realized == std::vector<Int>{7});
    CHECK(realize_copy(m, Int{1}, Int{2}, ConfigSet<Int>({0, 1, 2})).realized ==
          std::vector<Int>{1, 3, 5});
    CHECK(realize_copy(m, Int{3}, Int{0}, ConfigSet<Int>({0, 1, 2})).realized ==
          std::vector<Int>{3});
    CHECK_THROWS_AS(ConfigSet<Int>({}), MalformedInput);
    CHECK_THROWS_AS(ConfigSet<Int>({1, 1}), MalformedInput);
    CHECK_THROWS_AS(realize_copy(NatModule(10), Int{5}, Int{3}, ConfigSet<Int>({0, 2})), Overflow);
  }

  TEST_CASE("realized size is |F| when d acts injectively") {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
      const auto F = gen::config(rng, 12, 5);
      const Int a = gen::uniform(rng, 0, 30);
      const Int d = gen::uniform(rng, 0, 6);
      const auto c = realize_copy(NatModule{}, a, d, ConfigSet<Int>(F));
      CHECK(c.realized.size() <= F.size());
      if (d != 0) CHECK(c.realized.size() == F.size());
    }
    // Z6 acting on itself: 2 . {0, 3} = {0, 0}, so the copy collapses.
    const auto z6 = FiniteSemimodule::regular(FiniteSemiring::integers_mod(6));
    CHECK(realize_copy(z6, std::size_t{1}, std::size_t{2}, ConfigSet<std::size_t>({0, 3})).realized
              .size() == 1);
  }

  TEST_CASE("enumerate_copies") {
    const NatModule m;
    const auto d4 = range_vec(1, 4);
    CHECK(enumerate_copies(m, ConfigSet<Int>({0, 1, 2}), NatRange(0, 8), std::span<const Int>(d4))
              .size() == 16);
    const auto d1 = range_vec(1, 1);
    CHECK(enumerate_copies(m, ConfigSet<Int>({0}), NatRange(0, 9), std::span<const Int>(d1)).size() ==
          10);
    const auto d2 = range_vec(1, 2);
    CHECK(enumerate_copies(m, ConfigSet<Int>({0, 5}), NatRange(0, 3), std::span<const Int>(d2))
              .empty());
  }

  TEST_CASE("enumerate_copies agrees with the double loop") {
    gen::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
      const auto F = gen::config(rng, 8, 4);
      const Int lo = gen::uniform(rng, 0, 20);
      const Interval w{lo, lo + gen::uniform(rng, 0, i < 190 ? 60 : 10000)};
      const Interval dr{gen::uniform(rng, 1, 3), gen::uniform(rng, 3, 12)};
      const auto ds = to_vector(dr);
      const auto copies =
          enumerate_copies(NatModule{}, ConfigSet<Int>(F), NatRange(w), std::span<const Int>(ds));
      CHECK(copies.size() == naive_copy_count(F, w, dr));
    }
  }

  TEST_CASE("check_syndetic") {
    const auto full = range_vec(0, 20);
    const Int k0[] = {0};
    CHECK(check_syndetic(full, Interval{0, 20}, k0).verified);
    std::vector<Int> evens;
    for (Int x = 0; x <= 100; x += 2) evens.push_back(x);
    const Int k01[] = {0, 1};
    CHECK(check_syndetic(evens, Interval{0, 100}, k01).verified);
    const Int zero[] = {0};
    const auto bad = check_syndetic(zero, Interval{0, 10}, k0);
    CHECK_FALSE(bad.verified);
    REQUIRE(bad.failing_t);
    CHECK(*bad.failing_t == 1);
    CHECK_THROWS_AS(check_syndetic(zero, Interval{0, 10}, std::span<const Int>()), EmptyK);
  }

  TEST_CASE("min_gap_certificate") {
    std::vector<Int> threes;
    for (Int x = 0; x <= 60; x += 3) threes.push_back(x);
    CHECK(min_gap_certificate(threes, Interval{0, 60}).K == std::vector<Int>{0, 1, 2});
    const std::vector<Int> D{0, 1, 5, 6, 7, 11, 12};
    CHECK(min_gap_certificate(D, Interval{0, 12}).K == std::vector<Int>{0, 1, 2, 3});
    const std::vector<Int> seven{7};
    CHECK(min_gap_certificate(seven, Interval{0, 7}).K == range_vec(0, 7));
    const std::vector<Int> outside{50};
    CHECK_THROWS_AS(min_gap_certificate(outside, Interval{0, 7}), EmptyD);
  }

  TEST_CASE("check_syndetic is monotone in K") {
    gen::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
      const Interval w{0, gen::uniform(rng, 5, 80)};
      const auto D = gen::subset(rng, w, 1, 3);
      auto K = gen::config(rng, 6, 4);
      if (!check_syndetic(D, w, K).verified) continue;
      auto bigger = K;
      bigger.push_back(K.back() + gen::uniform(rng, 1, 3));
      bigger.insert(bigger.begin(), 0);
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      const auto c = check_syndetic(D, w, bigger);
      // With lo = 0 the translates checked for the larger K are a subset.
      CHECK(c.verified);
    }
  }

  TEST_CASE("syndetic sets of a finite semiring") {
    const auto z4 = FiniteSemiring::integers_mod(4);
    const Int D[] = {0, 2};
    const Int K[] = {0, 1};
    CHECK(check_syndetic(z4, D, K).verified);
    const auto found = find_syndetic_set(z4, D);
    REQUIRE(found);
    CHECK(check_syndetic(z4, D, *found).verified);
    // In the Boolean semiring 1 + t = 1, so {0} is never reached from 1.
    const Int zero[] = {0};
    CHECK_FALSE(find_syndetic_set(FiniteSemiring::boolean(), zero).has_value());
  }

  TEST_CASE("finite sums") {
    const Int g1[] = {1, 2, 4};
    CHECK(fs_prefix(g1).sums == range_vec(1, 7));
    const Int g2[] = {5};
    CHECK(fs_prefix(g2).sums == std::vector<Int>{5});
    const Int g3[] = {2, 2};
    CHECK(fs_prefix(g3).sums == std::vector<Int>{2, 4});
    const Int D[] = {3, 4, 8};
    CHECK(fs_intersection(fs_prefix(g1), D) == std::vector<Int>{3, 4});
  }

  TEST_CASE("finite-sum prefixes grow with the prefix") {
    gen::Rng rng(14);
    for (int i = 0; i < 200; ++i) {
      std::vector<Int> g;
      const auto k = gen::uniform(rng, 2, 8);
      for (Int j = 0; j < k; ++j) g.push_back(gen::uniform(rng, 1, 40));
      const auto small = fs_prefix(std::span<const Int>(g.data(), g.size() - 1)).sums;
      const auto big = fs_prefix(g).sums;
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      // Every sum is a subset sum, computed here by bitmask.
      std::set<Int> ref;
      for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
        Int s = 0;
        for (std::size_t b = 0; b < g.size(); ++b)
          if (mask >> b & 1u) s += g[b];
        ref.insert(s);
      }
      CHECK(std::vector<Int>(ref.begin(), ref.end()) == big);
    }
  }
}
