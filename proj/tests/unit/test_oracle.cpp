#include <doctest.h>

#include "semiramsey/oracle.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

TEST_SUITE("oracle") {
  TEST_CASE("naive Grünwald numbers") {
    CHECK(naive_grunwald(2, {0, 1}, 5) == 3);
    CHECK(naive_grunwald(1, {0, 1}, 5) == 2);
    CHECK(naive_grunwald(2, {0, 1, 2}, 9) == 9);
    CHECK_FALSE(naive_grunwald(2, {0, 1, 2}, 8).has_value());
    CHECK_THROWS_AS(naive_grunwald(3, {0, 1, 2}, 20, 1000), BudgetExceeded);
  }

  TEST_CASE("naive hitting sets") {
    const auto rot6 = FiniteTDS::nat(6, {gen::rotation(6, 1)});
    CHECK(naive_hitting(rot6, {0, 1}, {TimeElement{1}}, Interval{0, 12}) ==
          std::vector<Int>{0, 1, 5, 6, 7, 11, 12});
    CHECK(naive_hitting(rot6, {0, 1, 2, 3, 4, 5}, {TimeElement{1}}, Interval{0, 4}) ==
          std::vector<Int>{0, 1, 2, 3, 4});
    CHECK(naive_hitting(rot6, {}, {TimeElement{1}}, Interval{0, 4}).empty());
  }

  TEST_CASE("naive mono and diffset") {
    const std::vector<int> parity{1, 2, 1, 2, 1, 2, 1, 2, 1};
    const auto w = naive_mono(parity, 0, {0, 1, 2}, {1, 2, 3, 4});
    REQUIRE(w);
    CHECK(*w == NaiveMono{1, 0, 2});
    CHECK(naive_diffset(parity, 0, {0, 1}, 1, {1, 2, 3, 4, 5, 6}) == std::vector<Int>{2, 4, 6});
  }

  TEST_CASE("suites agree") {
    for (auto suite : {Suite::mono, Suite::diffset, Suite::hitting}) {
      const auto reports = cross_check(suite, 7);
      CHECK(reports.size() == default_instances(suite));
      for (const auto& r : reports) CHECK(r.agree);
    }
    CrossCheckOptions few;
    few.instances = 4;
    for (const auto& r : cross_check(Suite::grunwald, 7, few)) CHECK(r.agree);
    CHECK(default_instances(Suite::mono) == 100);
    CHECK(default_instances(Suite::hitting) == 50);
  }

  TEST_CASE("an injected bug is caught and replays from its instance") {
    CrossCheckOptions opts;
    opts.engines.mono = [](const NatColoring&, const ConfigSet<Int>&, std::span<const Int>) {
      return std::optional<NaiveMono>{};
    };
    try {
      cross_check(Suite::mono, 3, opts);
      FAIL("expected a disagreement");
    } catch (const Disagreement& e) {
      const auto again = replay(e.instance(), opts.engines);
      CHECK_FALSE(again.agree);
      CHECK(replay(e.instance()).agree);
    }

    opts.throw_on_disagreement = false;
    opts.engines = Engines::optimized();
    opts.engines.hitting = [](const FiniteTDS& tds, const std::vector<std::size_t>& U,
                              const std::vector<TimeElement>& T, Interval w) {
      auto N = naive_hitting(tds, U, T, w);
      if (!N.empty()) N.pop_back();
      return N;
    };
    const auto reports = cross_check(Suite::hitting, 3, opts);
    std::size_t bad = 0;
    for (const auto& r : reports) {
      if (r.agree) continue;
      ++bad;
      CHECK_FALSE(replay(r.instance, opts.engines).agree);
    }
    CHECK(bad > 0);
  }

  TEST_CASE("suite names") {
    CHECK(parse_suite("diffset") == Suite::diffset);
    CHECK(std::string(to_string(Suite::grunwald)) == "grunwald");
    CHECK_THROWS_AS(parse_suite("nope"), MalformedInput);
    CHECK_THROWS_AS(replay("{not json"), MalformedInput);
  }

  TEST_CASE("random commuting systems commute") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const auto tds = random_commuting_tds(rng, 12, 3);
      const auto& m = tds.acting_maps();
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) CHECK(compose(m[a], m[b]) == compose(m[b], m[a]));
    }
  }
}
