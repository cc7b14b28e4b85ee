#include "semiramsey/grunwald.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

namespace semiramsey {

namespace {

// Shared between workers of one search: node budget and the longest
// copy-free coloring seen so far (only reported if the budget runs out).
class SharedState {
 public:
  explicit SharedState(std::uint64_t budget) : budget_(budget) {}

  // Adds a batch of locally counted nodes; false once the budget is spent.
  bool charge(std::uint64_t batch) {
    return nodes_.fetch_add(batch, std::memory_order_relaxed) + batch <= budget_;
  }
  void add_prunes(std::uint64_t n) { prunes_.fetch_add(n, std::memory_order_relaxed); }

  void offer(const std::vector<int>& colors) {
    std::lock_guard lock(mu_);
    if (colors.size() > longest_.size()) longest_ = colors;
  }

  [[noreturn]] void fail() const {
    std::lock_guard lock(mu_);
    throw GrunwaldBudgetExceeded(budget_, static_cast<Int>(longest_.size()) + 1, longest_);
  }

  std::uint64_t budget() const { return budget_; }
  std::uint64_t nodes() const { return std::min(nodes_.load(), budget_); }
  std::uint64_t prunes() const { return prunes_.load(); }
  std::atomic<bool> abort{false};

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> prunes_{0};
  mutable std::mutex mu_;
  std::vector<int> longest_;
};

struct BudgetSpent {};

// Local node counting, flushed to the shared budget in batches.
class Meter {
 public:
  explicit Meter(SharedState& shared) : shared_(shared) {}
  ~Meter() { flush_quiet(); }

  void node() {
    if (++pending_ == batch) flush();
  }
  void prune() { ++prunes_; }
  void flush() {
    const bool ok = shared_.charge(pending_);
    pending_ = 0;
    shared_.add_prunes(prunes_);
    prunes_ = 0;
    if (!ok || shared_.abort.load(std::memory_order_relaxed)) {
      shared_.abort = true;
      throw BudgetSpent{};
    }
  }

 private:
  static constexpr std::uint64_t batch = 4096;
  void flush_quiet() {
    shared_.charge(pending_);
    shared_.add_prunes(prunes_);
    pending_ = prunes_ = 0;
  }
  SharedState& shared_;
  std::uint64_t pending_ = 0;
  std::uint64_t prunes_ = 0;
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs work(i) for i in [0, count) on `threads` workers pulling indices in
// increasing order. Exceptions other than BudgetSpent are rethrown; a spent
// budget is reported as true.
template <class Work>
bool run_indexed(std::size_t count, unsigned threads, SharedState& shared, Work&& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  bool spent = false;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) {
        if (shared.abort) return;
        work(i);
      }
    } catch (const BudgetSpent&) {
      std::lock_guard lock(error_mu);
      spent = true;
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      shared.abort = true;
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return spent;
}

struct Prefix {
  std::vector<int> colors;
  int max_used = 0;
};

// ---------------------------------------------------------------------------
// Z_+ prefixes: one max-depth DFS. N = 1 + the longest copy-free coloring.

class NatSearch {
 public:
  NatSearch(int q, std::vector<Int> F) : q_(q) {
    std::sort(F.begin(), F.end());
    fmax_ = F.back();
    F.pop_back();
    rest_ = std::move(F);
  }

  // Whether giving cell p color c closes a monochromatic copy whose last
  // cell is p: a = p - d*fmax for d = 1..p/fmax.
  bool closes_copy(const std::vector<int>& colors, Int p, int c) const {
    for (Int d = 1; d * fmax_ <= p; ++d) {
      const Int a = p - d * fmax_;
      bool mono = true;
      for (Int f : rest_) {
        if (colors[static_cast<std::size_t>(a + d * f)] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  }

  // Enumerates canonical copy-free prefixes of length `depth` in lex order;
  // also returns the longest copy-free coloring when none reaches depth.
  void prefixes(std::size_t depth, Meter& meter, std::vector<Prefix>& out,
                std::vector<int>& longest) const {
    std::vector<int> colors;
    walk(colors, 0, depth, meter, longest, [&](const std::vector<int>& c, int max_used) {
      out.push_back(Prefix{c, max_used});
    });
  }

  // Longest copy-free extension of `start` up to `cap` cells (lex-first
  // among the longest).
  std::vector<int> extend(const Prefix& start, std::size_t cap, Meter& meter) const {
    std::vector<int> colors = start.colors;
    std::vector<int> longest = colors;
    walk(colors, start.max_used, cap, meter, longest, [](const std::vector<int>&, int) {});
    return longest;
  }

 private:
  template <class AtDepth>
  void walk(std::vector<int>& colors, int max_used, std::size_t depth, Meter& meter,
            std::vector<int>& longest, AtDepth&& at_depth) const {
    if (colors.size() > longest.size()) longest = colors;
    if (colors.size() == depth) {
      at_depth(colors, max_used);
      return;
    }
    const Int p = static_cast<Int>(colors.size());
    const int limit = std::min(q_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      meter.node();
      if (closes_copy(colors, p, c)) {
        meter.prune();
        continue;
      }
      colors.push_back(c);
      walk(colors, std::max(max_used, c), depth, meter, longest, at_depth);
      colors.pop_back();
    }
  }

  int q_;
  Int fmax_ = 0;
  std::vector<Int> rest_;
};

void check_q(int q) {
  if (q < 1) throw MalformedInput("q must be at least 1");
}

// ---------------------------------------------------------------------------
// Cubes: decide each side length n separately.

class CubeSearch {
 public:
  CubeSearch(int q, const NatCube& cube, const ConfigSet<Point>& F) : q_(q) {
    const std::size_t cells = cube.size();
    closing_.assign(cells, {});
    NatVecModule module(cube.dim);
    std::vector<Int> d_values;
    const Int dmax = std::max<Int>(1, cube.hi - cube.lo);
    for (Int d = 1; d <= dmax; ++d) d_values.push_back(d);
    for_each_copy(module, F, cube, std::span<const Int>(d_values),
                  [&](const Point&, Int, std::span<const std::size_t> idx) {
                    // idx is sorted: the last cell closes the copy.
                    std::vector<std::size_t> others(idx.begin(), idx.end() - 1);
                    auto& list = closing_[idx.back()];
                    if (std::find(list.begin(), list.end(), others) == list.end()) {
                      list.push_back(std::move(others));
                    }
                    return true;
                  });
    cells_ = cells;
  }

  std::size_t cells() const { return cells_; }

  bool closes_copy(const std::vector<int>& colors, std::size_t p, int c) const {
    for (const auto& others : closing_[p]) {
      bool mono = true;
      for (std::size_t i : others) {
        if (colors[i] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  }

  // Canonical copy-free prefixes of length min(depth, cells).
  void prefixes(std::size_t depth, Meter& meter, std::vector<Prefix>& out) const {
    std::vector<int> colors;
    const std::atomic<bool> never{false};
    walk(colors, 0, std::min(depth, cells_), meter, never, [&](const std::vector<int>& c, int m) {
      out.push_back(Prefix{c, m});
      return false;
    });
  }

  // First complete copy-free coloring extending `start`, if any.
  std::optional<std::vector<int>> complete(const Prefix& start, Meter& meter,
                                           const std::atomic<bool>& cancel) const {
    std::vector<int> colors = start.colors;
    std::optional<std::vector<int>> found;
    walk(colors, start.max_used, cells_, meter, cancel, [&](const std::vector<int>& c, int) {
      found = c;
      return true;
    });
    return found;
  }

 private:
  struct Cancelled {};

  // at_depth returns true to stop the whole walk.
  template <class AtDepth>
  bool walk(std::vector<int>& colors, int max_used, std::size_t depth, Meter& meter,
            const std::atomic<bool>& cancel, AtDepth&& at_depth) const {
    if (colors.size() == depth) return at_depth(colors, max_used);
    if (cancel.load(std::memory_order_relaxed)) return true;
    const std::size_t p = colors.size();
    const int limit = std::min(q_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      meter.node();
      if (closes_copy(colors, p, c)) {
        meter.prune();
        continue;
      }
      colors.push_back(c);
      const bool stop = walk(colors, std::max(max_used, c), depth, meter, cancel, at_depth);
      colors.pop_back();
      if (stop) return true;
    }
    return false;
  }

  int q_;
  std::size_t cells_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> closing_;
};

}  // namespace

GrunwaldResult<NatRange> grunwald_number(int q, const ConfigSet<Int>& F,
                                         const GrunwaldOptions& opts) {
  check_q(q);
  for (Int f : F) {
    if (f < 0) throw MalformedInput("F must lie in Z_+");
  }
  const unsigned threads = resolve_threads(opts.threads);
  ExhaustionStats stats;
  stats.threads = threads;
  stats.split_depth = opts.split_depth;

  const Int fmax = *std::max_element(F.begin(), F.end());
  if (F.size() == 1) {
    // Every cell >= f is a one-cell copy a + 1*f, so only cells 0..f-1 can
    // be colored freely.
    const bool capped = opts.max_n > 0 && fmax >= opts.max_n;
    const Int n = capped ? opts.max_n : fmax;
    std::vector<int> colors(static_cast<std::size_t>(n), 1);
    return {n + 1, NatColoring(NatRange(0, n - 1), q, std::move(colors)), stats, capped};
  }
  const std::size_t cap = opts.max_n > 0 ? static_cast<std::size_t>(opts.max_n)
                                         : std::numeric_limits<std::size_t>::max();

  const NatSearch search(q, F.elements());
  SharedState shared(opts.budget);
  std::vector<Prefix> starts;
  std::vector<int> longest;
  {
    Meter meter(shared);
    try {
      search.prefixes(std::min(opts.split_depth, cap), meter, starts, longest);
      meter.flush();
    } catch (const BudgetSpent&) {
      shared.offer(longest);
      shared.fail();
    }
  }
  shared.offer(longest);
  stats.subtrees = starts.size();

  std::vector<std::vector<int>> results(starts.size());
  const bool spent = run_indexed(starts.size(), threads, shared, [&](std::size_t i) {
    Meter meter(shared);
    results[i] = search.extend(starts[i], cap, meter);
    shared.offer(results[i]);
    meter.flush();
  });
  if (spent) shared.fail();

  for (auto& r : results) {
    if (r.size() > longest.size()) longest = std::move(r);
  }
  stats.nodes = shared.nodes();
  stats.prunes = shared.prunes();
  const Int n = static_cast<Int>(longest.size());
  const bool capped = opts.max_n > 0 && n == opts.max_n;
  return {n + 1, NatColoring(NatRange(0, n - 1), q, std::move(longest)), stats, capped};
}

GrunwaldResult<NatCube> grunwald_number(int q, const ConfigSet<Point>& F,
                                        const GrunwaldOptions& opts) {
  check_q(q);
  const std::size_t dim = F.elements().front().size();
  if (dim == 0) throw MalformedInput("F points need at least one coordinate");
  for (const auto& f : F) {
    if (f.size() != dim) throw MalformedInput("F points must share one dimension");
    for (Int c : f) {
      if (c < 0) throw MalformedInput("F must lie in Z_+^m");
    }
  }
  const unsigned threads = resolve_threads(opts.threads);
  ExhaustionStats stats;
  stats.threads = threads;
  stats.split_depth = opts.split_depth;
  SharedState shared(opts.budget);

  std::vector<int> previous;  // copy-free coloring of cube n-1
  for (Int n = 1;; ++n) {
    if (opts.max_n > 0 && n > opts.max_n) {
      stats.nodes = shared.nodes();
      stats.prunes = shared.prunes();
      NatCube ext{dim, 0, n - 2};
      return {n, Coloring<NatCube>(ext, q, std::move(previous)), stats, true};
    }
    const NatCube cube{dim, 0, n - 1};
    const CubeSearch search(q, cube, F);
    std::vector<Prefix> starts;
    {
      Meter meter(shared);
      try {
        search.prefixes(opts.split_depth, meter, starts);
        meter.flush();
      } catch (const BudgetSpent&) {
        shared.offer(previous);
        shared.fail();
      }
    }
    stats.subtrees += starts.size();

    // Lowest subtree index holding a complete coloring; higher subtrees may
    // stop early, lower ones always run to the end.
    std::atomic<std::size_t> best{starts.size()};
    std::vector<std::optional<std::vector<int>>> found(starts.size());
    std::vector<std::unique_ptr<std::atomic<bool>>> cancel;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      cancel.push_back(std::make_unique<std::atomic<bool>>(false));
    }
    const bool spent = run_indexed(starts.size(), threads, shared, [&](std::size_t i) {
      if (i > best.load()) return;
      Meter meter(shared);
      found[i] = search.complete(starts[i], meter, *cancel[i]);
      meter.flush();
      if (!found[i]) return;
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      for (std::size_t j = i + 1; j < starts.size(); ++j) *cancel[j] = true;
    });
    if (spent) {
      shared.offer(previous);
      shared.fail();
    }
    const std::size_t b = best.load();
    if (b == starts.size()) {
      stats.nodes = shared.nodes();
      stats.prunes = shared.prunes();
      NatCube ext{dim, 0, n - 2};
      return {n, Coloring<NatCube>(ext, q, std::move(previous)), stats, false};
    }
    previous = std::move(*found[b]);
    shared.offer(previous);
  }
}

bool verify_grunwald_extremal(const GrunwaldResult<NatRange>& result, const ConfigSet<Int>& F) {
  const auto& c = result.extremal;
  if (static_cast<Int>(c.window().size()) != result.N - 1) return false;
  std::vector<Int> d_values;
  for (Int d = 1; d <= std::max<Int>(1, result.N); ++d) d_values.push_back(d);
  return !find_mono_copy(NatModule{}, c, F, std::span<const Int>(d_values)).has_value();
}

bool verify_grunwald_extremal(const GrunwaldResult<NatCube>& result, const ConfigSet<Point>& F) {
  const auto& c = result.extremal;
  if (c.window().hi - c.window().lo + 1 != result.N - 1) return false;
  std::vector<Int> d_values;
  for (Int d = 1; d <= std::max<Int>(1, result.N); ++d) d_values.push_back(d);
  return !find_mono_copy(NatVecModule(c.window().dim), c, F, std::span<const Int>(d_values))
              .has_value();
}

}  // namespace semiramsey
