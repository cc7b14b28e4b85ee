#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "semiramsey/dynamics.hpp"
#include "semiramsey/ramsey.hpp"

namespace semiramsey {

// Reference implementations. They share only the domain types with the
// optimized engine: plain loops, no pruning, no symmetry reduction, no
// period detection.

inline constexpr std::uint64_t default_oracle_budget = 1'000'000;

// Smallest n <= n_max such that every q-coloring of {0..n-1} has a
// monochromatic a + dF with d >= 1, by listing every coloring. Throws
// BudgetExceeded when sum_{n <= n_max} q^n exceeds the budget.
std::optional<Int> naive_grunwald(int q, const std::vector<Int>& F, Int n_max,
                                  std::uint64_t budget = default_oracle_budget);

struct NaiveMono {
  int color = 0;
  Int a = 0;
  Int d = 0;
  bool operator==(const NaiveMono&) const = default;
};

// colors[i] is the color of lo + i. First hit in (d, a) order.
std::optional<NaiveMono> naive_mono(const std::vector<int>& colors, Int lo,
                                    const std::vector<Int>& F, const std::vector<Int>& d_values,
                                    bool allow_zero_d = false);

std::vector<Int> naive_diffset(const std::vector<int>& colors, Int lo, const std::vector<Int>& F,
                               int j, const std::vector<Int>& d_values, bool allow_zero_d = false);

// Triple loop over (t, x in U, i), applying the generators step by step.
std::vector<Int> naive_hitting(const FiniteTDS& tds, const std::vector<std::size_t>& U,
                               const std::vector<TimeElement>& T_list, Interval window);

// ---------------------------------------------------------------------------
// Differential testing.

enum class Suite { mono, diffset, hitting, grunwald };

Suite parse_suite(const std::string& name);
const char* to_string(Suite suite);

// The optimized side of each comparison; tests swap in broken engines to
// check that the harness notices.
struct Engines {
  std::function<std::optional<NaiveMono>(const NatColoring&, const ConfigSet<Int>&,
                                         std::span<const Int>)>
      mono;
  std::function<std::vector<Int>(const NatColoring&, const ConfigSet<Int>&, int,
                                 std::span<const Int>)>
      diffset;
  std::function<std::vector<Int>(const FiniteTDS&, const std::vector<std::size_t>&,
                                 const std::vector<TimeElement>&, Interval)>
      hitting;
  // N(q, F) when it is at most n_max, nullopt otherwise.
  std::function<std::optional<Int>(int, const ConfigSet<Int>&, Int)> grunwald;

  static Engines optimized();
};

// One comparison. instance, optimized and naive are JSON texts; instance
// alone is enough to replay the case.
struct DiffReport {
  std::string operation;
  std::string instance;
  std::string optimized;
  std::string naive;
  bool agree = false;
};

struct CrossCheckOptions {
  std::size_t instances = 0;  // 0: the suite's default count
  bool throw_on_disagreement = true;
  Engines engines = Engines::optimized();
};

std::size_t default_instances(Suite suite);

// Throws Disagreement (carrying the instance) on the first mismatch unless
// told to collect all reports.
std::vector<DiffReport> cross_check(Suite suite, std::uint64_t seed,
                                    const CrossCheckOptions& opts = {});

// Re-runs one serialized instance.
DiffReport replay(const std::string& instance, const Engines& engines = Engines::optimized());

// ---------------------------------------------------------------------------
// Seeded instance generators, shared by the suites and the tests.

// Commuting generators built as powers of one random map, or as products
// f x id, id x g, f x g on A x B.
FiniteTDS random_commuting_tds(std::mt19937_64& rng, std::size_t max_states,
                               std::size_t max_generators);

}  // namespace semiramsey
