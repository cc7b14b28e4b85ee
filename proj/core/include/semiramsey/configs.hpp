#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiramsey/algebra.hpp"
#include "semiramsey/error.hpp"
#include "semiramsey/types.hpp"

namespace semiramsey {

// Anything with an additive monoid of elements and a scalar action.
template <class M>
concept SemimoduleModel = requires(const M& m, const typename M::element& g,
                                   const typename M::scalar& r) {
  { m.add(g, g) } -> std::convertible_to<typename M::element>;
  { m.act(r, g) } -> std::convertible_to<typename M::element>;
  { m.zero() } -> std::convertible_to<typename M::element>;
  { m.is_zero_scalar(r) } -> std::convertible_to<bool>;
};

// A finite, indexed region of a semimodule. Colorings, copies and searches
// all address cells through index_of / at.
template <class W>
concept WindowModel = requires(const W& w, std::size_t i, const typename W::element& e) {
  { w.size() } -> std::convertible_to<std::size_t>;
  { w.at(i) } -> std::convertible_to<typename W::element>;
  { w.index_of(e) } -> std::same_as<std::optional<std::size_t>>;
};

// [lo, hi] in Z_+.
struct NatRange {
  using element = Int;
  Interval range;

  NatRange() = default;
  explicit NatRange(Interval r) : range(r) {
    if (r.lo < 0) throw MalformedInput("Z_+ windows start at 0 or later");
  }
  NatRange(Int lo, Int hi) : NatRange(Interval{lo, hi}) {}

  std::size_t size() const { return static_cast<std::size_t>(range.size()); }
  Int at(std::size_t i) const { return range.lo + static_cast<Int>(i); }
  std::optional<std::size_t> index_of(Int e) const {
    if (!range.contains(e)) return std::nullopt;
    return static_cast<std::size_t>(e - range.lo);
  }
};

// The cube [lo, hi]^dim in Z_+^dim; cells in lexicographic order with the
// last coordinate fastest.
struct NatCube {
  using element = Point;
  std::size_t dim = 1;
  Int lo = 0;
  Int hi = -1;

  std::size_t side() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) n *= side();
    return n;
  }
  Point at(std::size_t i) const {
    Point p(dim);
    for (std::size_t c = dim; c-- > 0;) {
      p[c] = lo + static_cast<Int>(i % side());
      i /= side();
    }
    return p;
  }
  std::optional<std::size_t> index_of(const Point& p) const {
    if (p.size() != dim) return std::nullopt;
    std::size_t i = 0;
    for (Int c : p) {
      if (c < lo || c > hi) return std::nullopt;
      i = i * side() + static_cast<std::size_t>(c - lo);
    }
    return i;
  }
};

// All elements 0..count-1 of a finite semimodule.
struct IndexWindow {
  using element = std::size_t;
  std::size_t count = 0;

  std::size_t size() const { return count; }
  std::size_t at(std::size_t i) const { return i; }
  std::optional<std::size_t> index_of(std::size_t e) const {
    if (e >= count) return std::nullopt;
    return e;
  }
};

// A finite configuration F: nonempty, duplicate-free, order as given.
template <class E>
class ConfigSet {
 public:
  explicit ConfigSet(std::vector<E> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw MalformedInput("configuration F must be nonempty");
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw MalformedInput("configuration F has duplicate elements");
    }
  }

  const std::vector<E>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  std::vector<E> elements_;
};

// a + dF. The realized set is sorted and duplicate-free.
template <class E, class S>
struct HomotheticCopy {
  E a{};
  S d{};
  std::vector<E> realized;
};

template <SemimoduleModel M>
using CopyOf = HomotheticCopy<typename M::element, typename M::scalar>;

// Computes a + dF exactly; Overflow propagates from windowed arithmetic.
template <SemimoduleModel M>
CopyOf<M> realize_copy(const M& module, const typename M::element& a,
                       const typename M::scalar& d,
                       const ConfigSet<typename M::element>& F) {
  CopyOf<M> copy{a, d, {}};
  copy.realized.reserve(F.size());
  for (const auto& f : F) copy.realized.push_back(module.add(a, module.act(d, f)));
  std::sort(copy.realized.begin(), copy.realized.end());
  copy.realized.erase(std::unique(copy.realized.begin(), copy.realized.end()),
                      copy.realized.end());
  return copy;
}

// Visits every (d, a) with d from d_values (in order), a from the window (in
// window order) and a + dF inside the window. The visitor receives a, d and
// the sorted window indices of the realized cells and returns false to stop.
// Copies that overflow the arithmetic window are outside every window and
// are skipped.
template <SemimoduleModel M, WindowModel W, class Visit>
  requires std::same_as<typename M::element, typename W::element>
void for_each_copy(const M& module, const ConfigSet<typename M::element>& F, const W& window,
                   std::span<const typename M::scalar> d_values, Visit&& visit) {
  std::vector<std::size_t> cells;
  cells.reserve(F.size());
  for (const auto& d : d_values) {
    std::vector<typename M::element> dF;
    dF.reserve(F.size());
    bool scaled = true;
    try {
      for (const auto& f : F) dF.push_back(module.act(d, f));
    } catch (const Overflow&) {
      scaled = false;
    }
    if (!scaled) continue;
    for (std::size_t ai = 0; ai < window.size(); ++ai) {
      const auto a = window.at(ai);
      cells.clear();
      bool inside = true;
      try {
        for (const auto& x : dF) {
          auto idx = window.index_of(module.add(a, x));
          if (!idx) {
            inside = false;
            break;
          }
          cells.push_back(*idx);
        }
      } catch (const Overflow&) {
        inside = false;
      }
      if (!inside) continue;
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      if (!visit(a, d, std::span<const std::size_t>(cells))) return;
    }
  }
}

// Every copy inside the window, in (d, a) lexicographic order.
template <SemimoduleModel M, WindowModel W>
  requires std::same_as<typename M::element, typename W::element>
std::vector<CopyOf<M>> enumerate_copies(const M& module,
                                        const ConfigSet<typename M::element>& F,
                                        const W& window,
                                        std::span<const typename M::scalar> d_values) {
  std::vector<CopyOf<M>> out;
  for_each_copy(module, F, window, d_values, [&](const auto& a, const auto& d, auto cells) {
    CopyOf<M> c{a, d, {}};
    for (std::size_t i : cells) c.realized.push_back(window.at(i));
    std::sort(c.realized.begin(), c.realized.end());
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Syndeticity on Z_+ windows.
//
// A translate t is examined only when K + t lies inside the window; the rest
// cannot be decided from windowed data and are skipped. `checked` records the
// range of translates that were examined (empty when none fit).

struct SyndeticCertificate {
  std::vector<Int> D;
  std::vector<Int> K;
  Interval window;
  bool verified = false;
  std::optional<Int> failing_t;
  Interval checked;
};

SyndeticCertificate check_syndetic(std::span<const Int> D, Interval window,
                                   std::span<const Int> K);

// Smallest interval K = {0..k} that certifies D on the window. Throws EmptyD
// when D has no element in the window.
SyndeticCertificate min_gap_certificate(std::span<const Int> D, Interval window);

// Syndeticity in the additive monoid of a finite semiring: every translate
// K + t, t in R, must meet D. Elements are indices; window is [0, |R|-1].
SyndeticCertificate check_syndetic(const FiniteSemiring& ring, std::span<const Int> D,
                                   std::span<const Int> K);

// Greedy K for a finite semiring; nullopt when D is not syndetic (some
// translate class never reaches D).
std::optional<std::vector<Int>> find_syndetic_set(const FiniteSemiring& ring,
                                                  std::span<const Int> D);

// ---------------------------------------------------------------------------
// Finite-sums prefixes FS(<d_1..d_k>) in (Z_+, +).

struct FSPrefix {
  std::vector<Int> generators;
  std::vector<Int> sums;  // sorted, distinct
};

FSPrefix fs_prefix(std::span<const Int> generators, const NatWindow& ring = NatWindow{});

// Elements of FS(prefix) that lie in D (sorted). Used to explore whether a
// hitting-time set meets a given IP-set prefix.
std::vector<Int> fs_intersection(const FSPrefix& prefix, std::span<const Int> D);

}  // namespace semiramsey
