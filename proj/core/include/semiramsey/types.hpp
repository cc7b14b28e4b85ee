#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace semiramsey {

using Int = std::int64_t;

// A point of Z_+^m.
using Point = std::vector<Int>;

// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
  Int lo = 0;
  Int hi = -1;

  bool empty() const { return lo > hi; }
  Int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(Int x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::vector<Int> to_vector(Interval r) {
  std::vector<Int> out;
  for (Int x = r.lo; x <= r.hi; ++x) out.push_back(x);
  return out;
}

}  // namespace semiramsey
