#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiramsey/ramsey.hpp"

namespace semiramsey {

// Window-limited picture of the orbit closure of a coloring xi of Z_+ under
// the shift x(.) -> x(. + 1). Nodes are the distinct words
// xi[p .. p+s-1] (shape {0..s-1}); an edge u -> v records an occurrence of u
// at p followed by v at p + 1.
struct SubshiftApprox {
  std::size_t shape = 0;
  std::vector<std::vector<int>> nodes;  // in order of first occurrence
  std::vector<Int> first_occurrence;    // window position, per node
  std::vector<std::pair<std::size_t, std::size_t>> transitions;  // sorted, distinct
};

struct WeakCentralCertificate {
  int color = 0;                 // j = eta(0)
  std::vector<int> eta;          // the uniformly recurrent pattern
  Int eta_position = 0;          // a shift of xi starting with eta
  std::vector<std::size_t> recurrent_class;  // node ids of the minimal class
  std::vector<Int> S;            // B_j on the window
  // True when the caller asserts eventual periodicity and the window shows
  // a full recurrent cycle; otherwise the result is window-limited.
  bool exact = false;
  std::string label;
};

struct SubshiftResult {
  SubshiftApprox subshift;
  WeakCentralCertificate certificate;
};

// Picks the minimal class: strongly connected node sets with a cycle that no
// edge leaves, after discarding cycle-free sink classes (those only mark the
// window's right edge). The class whose pattern occurs first wins. Throws
// WindowTooSmall when the window is shorter than the shape plus one or no
// such class exists.
SubshiftResult furstenberg_subshift(const NatColoring& c, std::size_t shape,
                                    bool assume_eventually_periodic);

// Independent re-check: S is exactly the color class of j on the window,
// eta occurs at eta_position, and eta's node lies on a cycle of the
// pattern graph rebuilt from the coloring.
bool verify_weak_central(const NatColoring& c, const SubshiftResult& r);

struct PiecewiseResult {
  bool holds = false;
  std::optional<Interval> witness;
};

// True iff some interval of length >= L in the window has every block
// [t, t + k - 1] inside it meeting S. The witness is the longest such
// interval (first on ties).
PiecewiseResult piecewise_syndetic_check(const std::vector<Int>& S, Interval window, Int k,
                                         Int L);

}  // namespace semiramsey
