#pragma once

#include <cstdint>
#include <vector>

#include "semiramsey/ramsey.hpp"

namespace semiramsey {

// Finitary Grünwald numbers N(q, F): the least n such that every q-coloring
// of G_n contains a monochromatic a + dF with d != 0. G_n is the prefix
// window {0..n-1} of Z_+, or the cube {0..n-1}^m of Z_+^m.
//
// Search invariants:
//  - cells are assigned in window order; a copy is checked once, when its
//    last cell is assigned;
//  - cell 0 gets color 1 and a new color is only the next unused one, so
//    each coloring class under color permutation is visited once;
//  - the tree is split at a fixed depth (independent of the thread count)
//    and subtree results are reduced by subtree index, so the answer and
//    the extremal coloring are identical for any number of threads.

inline constexpr std::uint64_t default_grunwald_budget = 4'000'000'000ULL;

struct GrunwaldOptions {
  std::uint64_t budget = default_grunwald_budget;  // nodes, shared by all workers
  unsigned threads = 1;                            // 0 = hardware concurrency
  std::size_t split_depth = 10;
  // > 0: look only at windows of up to max_n cells (per side).
  Int max_n = 0;
};

struct ExhaustionStats {
  std::uint64_t nodes = 0;   // cell assignments tried
  std::uint64_t prunes = 0;  // assignments rejected by a monochromatic copy
  std::size_t subtrees = 0;
  std::size_t split_depth = 0;
  unsigned threads = 1;
  bool symmetry_reduced = true;
};

template <WindowModel W>
struct GrunwaldResult {
  Int N = 0;
  Coloring<W> extremal;  // window of N - 1 cells (per side), free of copies
  ExhaustionStats exhaustion;
  // A copy-free coloring of max_n cells exists: N > max_n, N holds max_n + 1
  // and extremal has max_n cells.
  bool exceeds_max_n = false;
};

// Thrown when the node budget runs out. lower_bound() is N >= that value,
// backed by the copy-free coloring in witness().
class GrunwaldBudgetExceeded : public BudgetExceeded {
 public:
  GrunwaldBudgetExceeded(std::uint64_t budget, Int lower_bound, std::vector<int> witness)
      : BudgetExceeded("Grünwald search exceeded the node budget of " + std::to_string(budget) +
                           "; N >= " + std::to_string(lower_bound),
                       budget),
        lower_bound_(lower_bound),
        witness_(std::move(witness)) {}

  Int lower_bound() const noexcept { return lower_bound_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  Int lower_bound_;
  std::vector<int> witness_;
};

// F subset of Z_+. Copies use every d >= 1 that fits.
GrunwaldResult<NatRange> grunwald_number(int q, const ConfigSet<Int>& F,
                                         const GrunwaldOptions& opts = {});

// F subset of Z_+^m, scalars d >= 1. Each side length n is decided by its
// own search; cube n-1 embeds in cube n, so the first n without a copy-free
// coloring is N.
GrunwaldResult<NatCube> grunwald_number(int q, const ConfigSet<Point>& F,
                                        const GrunwaldOptions& opts = {});

// Independent re-check of a result: the extremal coloring has no
// monochromatic copy with d != 0. Minimality of N is the search's claim and
// is not re-derived here.
bool verify_grunwald_extremal(const GrunwaldResult<NatRange>& result, const ConfigSet<Int>& F);
bool verify_grunwald_extremal(const GrunwaldResult<NatCube>& result, const ConfigSet<Point>& F);

}  // namespace semiramsey
