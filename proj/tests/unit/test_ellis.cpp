#include <doctest.h>

#include <algorithm>
#include <set>

#include "semiramsey/ellis.hpp"
#include "support/generators.hpp"

using namespace semiramsey;

TEST_SUITE("ellis") {
  TEST_CASE("generated semigroups") {
    const auto z5 = generate_semigroup(5, {gen::rotation(5, 1)});
    CHECK(z5.elements.size() == 5);
    CHECK_FALSE(z5.identity_adjoined);
    const auto c0 = generate_semigroup(2, {Map{0, 0}});
    CHECK(c0.elements.size() == 2);
    CHECK(c0.identity_adjoined);
    CHECK(generate_semigroup(6, {gen::rotation(6, 2), gen::rotation(6, 3)}).elements.size() == 6);
    CHECK_THROWS_AS(generate_semigroup(6, {gen::rotation(6, 1)}, 3),
                    BudgetExceeded);
  }

  TEST_CASE("ideals") {
    const auto z4 = ideal_analysis(generate_semigroup(4, {gen::rotation(4, 1)}));
    REQUIRE(z4.minimal_left_ideals.size() == 1);
    CHECK(z4.minimal_left_ideals[0].size() == 4);
    CHECK(z4.idempotents == std::vector<std::size_t>{0});

    const auto S = generate_semigroup(2, {Map{0, 0}});
    const auto r = ideal_analysis(S);
    const auto c0 = *S.index_of(Map{0, 0});
    CHECK(r.minimal_left_ideals == std::vector<std::vector<std::size_t>>{{c0}});
    CHECK(r.idempotents.size() == 2);
    CHECK(r.minimal_idempotents == std::vector<std::size_t>{c0});

    // Every constant map on {0,1,2}: the constants form the one minimal ideal.
    const auto consts = generate_semigroup(3, {Map{0, 0, 0}, Map{1, 1, 1}, Map{2, 2, 2}});
    const auto cr = ideal_analysis(consts);
    REQUIRE(cr.minimal_left_ideals.size() == 1);
    CHECK(cr.minimal_left_ideals[0].size() == 3);
    CHECK(cr.minimal_idempotents.size() == 3);
  }

  TEST_CASE("closure, idempotents in minimal ideals, and group case") {
    gen::Rng rng(61);
    for (int i = 0; i < 100; ++i) {
      const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
      const bool bij = gen::coin(rng);
      std::vector<Map> g;
      for (Int k = gen::uniform(rng, 1, 2); k > 0; --k)
        g.push_back(bij ? gen::random_permutation(rng, n) : gen::random_map(rng, n));
      const auto S = generate_semigroup(n, g);
      for (const auto& a : S.elements)
        for (const auto& b : S.elements) CHECK(S.index_of(compose(a, b)).has_value());
      const auto r = ideal_analysis(S);
      for (const auto& ideal : r.minimal_left_ideals) {
        const bool has = std::any_of(ideal.begin(), ideal.end(), [&](std::size_t e) {
          return std::find(r.idempotents.begin(), r.idempotents.end(), e) != r.idempotents.end();
        });
        CHECK(has);
      }
      if (bij) {
        REQUIRE(r.minimal_left_ideals.size() == 1);
        CHECK(r.minimal_left_ideals[0].size() == S.elements.size());
      }
    }
  }

  TEST_CASE("product minimality on Z4") {
    const auto tds = FiniteTDS::nat(4, {gen::rotation(4, 1)});
    std::vector<Tuple> diag;
    for (std::size_t x = 0; x < 4; ++x) diag.push_back({x, x});
    const auto r = verify_product_minimality(tds, {TimeElement{1}, TimeElement{3}}, diag);
    std::vector<Tuple> even;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if ((b + 4 - a) % 2 == 0) even.push_back({a, b});
    std::sort(even.begin(), even.end());
    CHECK(r.sigma == even);
    CHECK(r.minimal);
    CHECK(r.passed);

    std::vector<Tuple> all;
    for (std::size_t x = 0; x < 4; ++x) all.push_back({x});
    const auto one = verify_product_minimality(tds, {TimeElement{1}}, all);
    CHECK(one.sigma == all);
    CHECK(one.passed);

    const auto dec = FiniteTDS::nat(3, {Map{0, 0, 1}});
    CHECK_THROWS_AS(verify_product_minimality(dec, {TimeElement{1}}, {{0}}), HypothesisFailed);
  }

  TEST_CASE("sigma contains lambda and is invariant on random minimal rotations") {
    gen::Rng rng(62);
    for (int i = 0; i < 60; ++i) {
      const auto m = static_cast<std::size_t>(gen::uniform(rng, 2, 7));
      const auto tds = FiniteTDS::nat(m, {gen::rotation(m, 1)});
      const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
      std::vector<TimeElement> T;
      // T_1 = the rotation itself keeps <T_1..T_n> minimal.
      T.push_back({1});
      for (std::size_t k = 1; k < n; ++k) T.push_back({gen::uniform(rng, 1, 4)});
      // The diagonal is the orbit of (0, .., 0) under the diagonal rotations.
      std::vector<Tuple> diag;
      for (std::size_t x = 0; x < m; ++x) diag.push_back(Tuple(n, x));
      const auto r = verify_product_minimality(tds, T, diag);
      CHECK(r.sigma_contains_lambda);
      CHECK(r.xi_invariant);
      CHECK(r.theta_invariant);
      if (r.passed) CHECK(r.minimal);
    }
  }
}
