#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "semiramsey/dynamics.hpp"
#include "semiramsey/maps.hpp"
#include "semiramsey/ramsey.hpp"

// Hand-rolled generators for the property tests. Everything is driven by an
// explicit seed so a failing case can be replayed from the doctest output.
namespace gen {

using semiramsey::Int;
using semiramsey::Map;

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// Nonempty sorted subset of {0..max}, at most `size` elements.
inline std::vector<Int> config(Rng& rng, Int max, std::size_t size) {
  std::vector<Int> all;
  for (Int x = 0; x <= max; ++x) all.push_back(x);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(std::min(size, all.size())))));
  std::sort(all.begin(), all.end());
  return all;
}

inline std::vector<int> colors(Rng& rng, std::size_t n, int q) {
  std::vector<int> c(n);
  for (auto& x : c) x = static_cast<int>(uniform(rng, 1, q));
  return c;
}

inline semiramsey::NatColoring coloring(Rng& rng, Int lo, std::size_t n, int q) {
  return semiramsey::NatColoring(semiramsey::NatRange(lo, lo + static_cast<Int>(n) - 1), q,
                                 colors(rng, n, q));
}

// Subset of the window; each point kept with probability num/den.
inline std::vector<Int> subset(Rng& rng, semiramsey::Interval w, Int num, Int den) {
  std::vector<Int> out;
  for (Int x = w.lo; x <= w.hi; ++x)
    if (uniform(rng, 1, den) <= num) out.push_back(x);
  return out;
}

inline Map random_map(Rng& rng, std::size_t n) {
  Map m(n);
  for (auto& x : m) x = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<Int>(n) - 1));
  return m;
}

inline Map random_permutation(Rng& rng, std::size_t n) {
  Map m = semiramsey::identity_map(n);
  std::shuffle(m.begin(), m.end(), rng);
  return m;
}

inline Map rotation(std::size_t n, std::size_t by) {
  Map m(n);
  for (std::size_t x = 0; x < n; ++x) m[x] = static_cast<std::uint32_t>((x + by) % n);
  return m;
}

// Commuting generators: powers of one map, which commute by construction.
inline semiramsey::FiniteTDS commuting_tds(Rng& rng, std::size_t max_states,
                                           std::size_t max_generators, bool bijective) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_states)));
  const Map base = bijective ? random_permutation(rng, n) : random_map(rng, n);
  std::vector<Map> gens;
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_generators)));
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(semiramsey::map_power(base, static_cast<std::uint64_t>(uniform(rng, 1, 3))));
  return semiramsey::FiniteTDS::nat(n, std::move(gens));
}

// Sorted nonempty subset of the given states.
inline std::vector<std::size_t> pick(Rng& rng, const std::vector<std::size_t>& from) {
  std::vector<std::size_t> out;
  for (auto x : from)
    if (coin(rng)) out.push_back(x);
  if (out.empty()) out.push_back(from[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(from.size()) - 1))]);
  return out;
}

}  // namespace gen
