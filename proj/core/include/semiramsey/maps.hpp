#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "semiramsey/error.hpp"

namespace semiramsey {

// A total self-map of {0..n-1}, stored as its value array.
using Map = std::vector<std::uint32_t>;

inline Map identity_map(std::size_t n) {
  Map m(n);
  std::iota(m.begin(), m.end(), 0u);
  return m;
}

// (f o g)(x) = f(g(x)).
inline Map compose(const Map& f, const Map& g) {
  Map out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

// f^t by repeated squaring; f^0 is the identity.
inline Map map_power(const Map& f, std::uint64_t t) {
  Map result = identity_map(f.size());
  Map base = f;
  while (t > 0) {
    if (t & 1) result = compose(base, result);
    t >>= 1;
    if (t > 0) base = compose(base, base);
  }
  return result;
}

inline bool is_bijection(const Map& f) {
  std::vector<char> hit(f.size(), 0);
  for (auto v : f) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

inline void check_map(const Map& f, std::size_t n, const std::string& what) {
  if (f.size() != n) {
    throw MalformedInput(what + " has " + std::to_string(f.size()) + " entries, expected " +
                         std::to_string(n));
  }
  for (auto v : f) {
    if (v >= n) throw MalformedInput(what + " maps outside the state space");
  }
}

// Powers f^t are eventually periodic: f^(t + period) = f^t for t >= preperiod.
struct PowerCycle {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
};

// preperiod = longest tail into a cycle, period = lcm of cycle lengths.
inline PowerCycle power_cycle(const Map& f) {
  const std::size_t n = f.size();
  PowerCycle pc;
  std::vector<char> on_cycle(n, 0);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::size_t> path;
    std::size_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = f[x];
    }
    if (state[x] == 1) {
      std::uint64_t len = 0;
      std::size_t y = x;
      do {
        on_cycle[y] = 1;
        y = f[y];
        ++len;
      } while (y != x);
      pc.period = std::lcm(pc.period, len);
    }
    for (auto p : path) state[p] = 2;
  }
  for (std::size_t s = 0; s < n; ++s) {
    std::uint64_t tail = 0;
    for (std::size_t x = s; !on_cycle[x]; x = f[x]) ++tail;
    pc.preperiod = std::max(pc.preperiod, tail);
  }
  return pc;
}

}  // namespace semiramsey
