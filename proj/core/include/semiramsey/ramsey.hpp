#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiramsey/algebra.hpp"
#include "semiramsey/configs.hpp"

namespace semiramsey {

// A q-coloring of a window; colors are 1..q, stored in window-index order.
template <WindowModel W>
class Coloring {
 public:
  using element = typename W::element;

  Coloring(W window, int q, std::vector<int> colors)
      : window_(std::move(window)), q_(q), colors_(std::move(colors)) {
    if (q_ < 1) throw MalformedInput("coloring needs q >= 1");
    if (colors_.size() != window_.size()) {
      throw MalformedInput("coloring has " + std::to_string(colors_.size()) +
                           " cells, window has " + std::to_string(window_.size()));
    }
    for (int c : colors_) {
      if (c < 1 || c > q_) throw MalformedInput("color " + std::to_string(c) + " not in 1..q");
    }
  }

  const W& window() const { return window_; }
  int q() const { return q_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_at(std::size_t index) const { return colors_[index]; }
  std::optional<int> color_of(const element& e) const {
    auto i = window_.index_of(e);
    if (!i) return std::nullopt;
    return colors_[*i];
  }

 private:
  W window_;
  int q_;
  std::vector<int> colors_;
};

using NatColoring = Coloring<NatRange>;

// Digit string "1122..." over a Z_+ window.
NatColoring nat_coloring_from_digits(Interval window, int q, const std::string& digits);
std::string to_digits(const std::vector<int>& colors);

template <class E, class S>
struct MonoWitness {
  int color = 0;
  HomotheticCopy<E, S> copy;
};

struct SearchOptions {
  // d = 0 collapses dF to a point; excluded unless asked for.
  bool allow_zero_d = false;
};

// First monochromatic copy in (d, a) order.
template <SemimoduleModel M, WindowModel W>
  requires std::same_as<typename M::element, typename W::element>
std::optional<MonoWitness<typename M::element, typename M::scalar>> find_mono_copy(
    const M& module, const Coloring<W>& c, const ConfigSet<typename M::element>& F,
    std::span<const typename M::scalar> d_values, SearchOptions opts = {}) {
  std::optional<MonoWitness<typename M::element, typename M::scalar>> found;
  for_each_copy(module, F, c.window(), d_values, [&](const auto& a, const auto& d, auto cells) {
    if (!opts.allow_zero_d && module.is_zero_scalar(d)) return true;
    const int color = c.color_at(cells.front());
    for (std::size_t i : cells) {
      if (c.color_at(i) != color) return true;
    }
    found = MonoWitness<typename M::element, typename M::scalar>{color, realize_copy(module, a, d, F)};
    return false;
  });
  return found;
}

// Re-checks a witness from scratch through realize_copy.
template <SemimoduleModel M, WindowModel W>
  requires std::same_as<typename M::element, typename W::element>
bool verify_mono_witness(const M& module, const Coloring<W>& c,
                         const ConfigSet<typename M::element>& F,
                         const MonoWitness<typename M::element, typename M::scalar>& w,
                         SearchOptions opts = {}) {
  if (!opts.allow_zero_d && module.is_zero_scalar(w.copy.d)) return false;
  try {
    auto copy = realize_copy(module, w.copy.a, w.copy.d, F);
    if (copy.realized != w.copy.realized) return false;
    for (const auto& e : copy.realized) {
      auto col = c.color_of(e);
      if (!col || *col != w.color) return false;
    }
  } catch (const Overflow&) {
    return false;
  }
  return true;
}

template <class E, class S>
struct DiffSet {
  int color = 0;
  std::vector<S> D;  // in d_values order
};

// D = {d : some a has a + dF inside the window and colored j}.
template <SemimoduleModel M, WindowModel W>
  requires std::same_as<typename M::element, typename W::element>
DiffSet<typename M::element, typename M::scalar> diff_set(
    const M& module, const Coloring<W>& c, const ConfigSet<typename M::element>& F, int j,
    std::span<const typename M::scalar> d_values, SearchOptions opts = {}) {
  if (j < 1 || j > c.q()) throw MalformedInput("color out of range");
  DiffSet<typename M::element, typename M::scalar> out{j, {}};
  for (const auto& d : d_values) {
    if (!opts.allow_zero_d && module.is_zero_scalar(d)) continue;
    bool hit = false;
    const typename M::scalar one[] = {d};
    for_each_copy(module, F, c.window(), std::span<const typename M::scalar>(one),
                  [&](const auto&, const auto&, auto cells) {
                    for (std::size_t i : cells) {
                      if (c.color_at(i) != j) return true;
                    }
                    hit = true;
                    return false;
                  });
    if (hit) out.D.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Syndetic sets are vdW-sets. Z_+ windows only, since the gap certificates
// need the linear order.

struct VdwEntry {
  std::vector<Int> F;
  std::vector<Int> D;
  SyndeticCertificate certificate;  // verified == false when D is empty
};

struct VdwReport {
  bool syndetic_input = false;
  std::optional<SyndeticCertificate> input_certificate;
  std::vector<VdwEntry> entries;
};

// S counts as syndetic in the window when its minimal gap certificate has
// |K| <= max_k (default: half the window), so at least half of the window's
// translates are actually examined. A non-syndetic S is reported, not
// rejected.
// Each D_F certificate covers the d in d_values up to (|window| - 1) / max F,
// the largest d for which a copy fits.
VdwReport verify_vdw_set(std::span<const Int> S, Interval window,
                         std::span<const ConfigSet<Int>> F_list, std::span<const Int> d_values,
                         std::optional<Int> max_k = std::nullopt);

// ---------------------------------------------------------------------------

struct DiameterHit {
  Int a = 0;
  Int d = 0;
  double diameter = 0.0;
};

// Values of f: window -> R^l, indexed by window position. Distance is the
// max-coordinate metric. Returns the first (d, a) with diam f(a + dF) < eps.
std::optional<DiameterHit> diameter_search(Interval window,
                                           const std::vector<std::vector<double>>& values,
                                           double epsilon, const ConfigSet<Int>& F,
                                           std::span<const Int> d_values,
                                           SearchOptions opts = {});

template <class E>
struct SchurBrauerWitness {
  int color = 0;
  E a{};
  E b{};
};

// First (j, b, a) with b colored j, b != 0 and {a + f.b : f in F} inside
// color class j. F is a set of scalars.
template <SemimoduleModel M, WindowModel W>
  requires std::same_as<typename M::element, typename W::element>
std::optional<SchurBrauerWitness<typename M::element>> schur_brauer_search(
    const M& module, const Coloring<W>& c, std::span<const typename M::scalar> F) {
  const auto& win = c.window();
  for (int j = 1; j <= c.q(); ++j) {
    for (std::size_t bi = 0; bi < win.size(); ++bi) {
      if (c.color_at(bi) != j) continue;
      const auto b = win.at(bi);
      if (b == module.zero()) continue;
      std::vector<typename M::element> Fb;
      try {
        for (const auto& f : F) Fb.push_back(module.act(f, b));
      } catch (const Overflow&) {
        continue;
      }
      for (std::size_t ai = 0; ai < win.size(); ++ai) {
        const auto a = win.at(ai);
        bool ok = true;
        try {
          for (const auto& x : Fb) {
            auto col = c.color_of(module.add(a, x));
            if (!col || *col != j) {
              ok = false;
              break;
            }
          }
        } catch (const Overflow&) {
          ok = false;
        }
        if (ok) return SchurBrauerWitness<typename M::element>{j, a, b};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Every q-coloring of a tiny finite semimodule.

struct PartitionWitness {
  int color = 0;
  std::size_t a = 0;
  std::size_t d = 0;
};

struct PartitionColoringResult {
  std::vector<int> colors;             // per element of G
  std::optional<PartitionWitness> witness;  // first in (d, a) order
  bool zero_d_only = false;            // only d = 0 copies are monochromatic
};

struct PartitionReport {
  std::uint64_t colorings = 0;
  std::uint64_t passed = 0;
  bool all_passed = false;
  std::vector<PartitionColoringResult> results;
};

inline constexpr std::uint64_t default_partition_budget = 1'000'000;

PartitionReport exhaustive_partition_check(const FiniteSemimodule& G, int q,
                                           const ConfigSet<std::size_t>& F,
                                           bool require_nonzero_d,
                                           std::uint64_t budget = default_partition_budget);

}  // namespace semiramsey
