#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace semiramsey::detail {

// Strongly connected components (iterative Tarjan). Returns the component
// id of every vertex; ids are in reverse topological order of the
// condensation.
inline std::vector<std::size_t> scc_ids(const std::vector<std::vector<std::size_t>>& adj,
                                        std::size_t& count) {
  const std::size_t n = adj.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  count = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != unset) continue;
    std::vector<Frame> call{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.edge < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.edge++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace semiramsey::detail
