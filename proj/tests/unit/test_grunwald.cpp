#include <doctest.h>

#include <map>

#include "semiramsey/grunwald.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

namespace {

// True when some a + dF, d >= 1, inside {0..n-1} is monochromatic.
bool has_mono(const std::vector<int>& c, const std::vector<Int>& F) {
  const auto n = static_cast<Int>(c.size());
  for (Int d = 1; d * F.back() < n; ++d) {
    for (Int a = 0; a + d * F.back() < n; ++a) {
      const int first = c[static_cast<std::size_t>(a + d * F.front())];
      bool same = true;
      for (Int f : F) same = same && c[static_cast<std::size_t>(a + d * f)] == first;
      if (same) return true;
    }
  }
  return false;
}

// Smallest n <= n_max with every q-coloring of n cells containing a copy, by
// listing colorings as base-q counters.
std::optional<Int> brute_grunwald(int q, const std::vector<Int>& F, Int n_max) {
  for (Int n = 1; n <= n_max; ++n) {
    std::vector<int> c(static_cast<std::size_t>(n), 1);
    bool all = true;
    while (all) {
      if (!has_mono(c, F)) all = false;
      std::size_t i = 0;
      while (i < c.size() && c[i] == q) c[i++] = 1;
      if (i == c.size()) break;
      ++c[i];
    }
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("grunwald") {
  TEST_CASE("small Grünwald numbers") {
    CHECK(grunwald_number(1, ConfigSet<Int>({0, 1})).N == 2);
    CHECK(grunwald_number(2, ConfigSet<Int>({0, 1})).N == 3);
    const auto r = grunwald_number(2, ConfigSet<Int>({0, 1, 2}));
    CHECK(r.N == 9);
    CHECK(r.extremal.colors().size() == 8);
    CHECK(verify_grunwald_extremal(r, ConfigSet<Int>({0, 1, 2})));
  }

  TEST_CASE("the search agrees with brute force when q^n is small") {
    const std::vector<std::vector<Int>> configs{{0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                                {1, 2}, {0, 3}, {0, 1, 4}};
    for (int q = 1; q <= 2; ++q) {
      for (const auto& F : configs) {
        CAPTURE(q);
        CAPTURE(F.back());
        const auto N = grunwald_number(q, ConfigSet<Int>(F)).N;
        // Listing is affordable while q^N stays near 2^16.
        if (N <= 16) CHECK(brute_grunwald(q, F, N) == N);
      }
    }
    CHECK(brute_grunwald(3, {0, 1}, 8) == grunwald_number(3, ConfigSet<Int>({0, 1})).N);
  }

  TEST_CASE("monotone in F and in q") {
    std::map<std::pair<int, std::vector<Int>>, Int> N;
    const std::vector<std::vector<Int>> configs{{0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 3}};
    for (int q = 1; q <= 3; ++q)
      for (const auto& F : configs)
        if (!(q == 3 && F.size() == 3)) N[{q, F}] = grunwald_number(q, ConfigSet<Int>(F)).N;
    for (const auto& [k1, n1] : N) {
      for (const auto& [k2, n2] : N) {
        const bool subset = std::includes(k2.second.begin(), k2.second.end(), k1.second.begin(),
                                          k1.second.end());
        if (k1.first == k2.first && subset) CHECK(n1 <= n2);
        if (k1.second == k2.second && k1.first < k2.first) CHECK(n1 <= n2);
      }
    }
  }

  TEST_CASE("random colorings of N cells always contain a copy") {
    gen::Rng rng(31);
    const std::vector<Int> F{0, 1, 2};
    const Int N = grunwald_number(2, ConfigSet<Int>(F)).N;
    for (Int n = N; n <= N + 6; ++n)
      for (int i = 0; i < 1000; ++i)
        CHECK(has_mono(gen::colors(rng, static_cast<std::size_t>(n), 2), F));
  }

  TEST_CASE("thread count does not change the answer") {
    GrunwaldOptions one;
    one.threads = 1;
    GrunwaldOptions four;
    four.threads = 4;
    const ConfigSet<Int> F({0, 1, 3});
    const auto a = grunwald_number(2, F, one);
    const auto b = grunwald_number(2, F, four);
    CHECK(a.N == b.N);
    CHECK(a.extremal.colors() == b.extremal.colors());
  }

  TEST_CASE("budget exhaustion reports a certified lower bound") {
    GrunwaldOptions tiny;
    tiny.budget = 20;
    try {
      grunwald_number(2, ConfigSet<Int>({0, 1, 2}), tiny);
      FAIL("expected the budget to run out");
    } catch (const GrunwaldBudgetExceeded& e) {
      CHECK(e.lower_bound() >= 1);
      CHECK(static_cast<Int>(e.witness().size()) == e.lower_bound() - 1);
      CHECK_FALSE(has_mono(e.witness(), {0, 1, 2}));
    }
  }

  TEST_CASE("max_n caps the walk") {
    GrunwaldOptions capped;
    capped.max_n = 5;
    const auto r = grunwald_number(2, ConfigSet<Int>({0, 1, 2}), capped);
    CHECK(r.exceeds_max_n);
    CHECK(r.N == 6);
    CHECK(r.extremal.colors().size() == 5);
    capped.max_n = 20;
    const auto full = grunwald_number(2, ConfigSet<Int>({0, 1, 2}), capped);
    CHECK_FALSE(full.exceeds_max_n);
    CHECK(full.N == 9);
  }

  TEST_CASE("corners in the plane") {
    const ConfigSet<Point> corner({{0, 0}, {0, 1}, {1, 0}});
    const auto r = grunwald_number(1, corner);
    CHECK(r.N == 2);
    const auto two = grunwald_number(2, corner);
    CHECK(verify_grunwald_extremal(two, corner));
    CHECK(two.extremal.window().side() == static_cast<std::size_t>(two.N - 1));
  }
}
