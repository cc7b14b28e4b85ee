#include "semiramsey/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "detail/graph.hpp"

namespace semiramsey {

namespace {

struct PatternGraph {
  SubshiftApprox approx;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::size_t> node_at;  // window offset -> node
};

PatternGraph build_pattern_graph(const NatColoring& c, std::size_t shape) {
  const auto& colors = c.colors();
  if (shape == 0) throw MalformedInput("pattern shape must be nonempty");
  if (colors.size() < shape + 1) {
    throw WindowTooSmall("window of " + std::to_string(colors.size()) +
                         " cells cannot shift a pattern of " + std::to_string(shape) + " cells");
  }
  PatternGraph g;
  g.approx.shape = shape;
  std::map<std::vector<int>, std::size_t> ids;
  const std::size_t positions = colors.size() - shape + 1;
  for (std::size_t p = 0; p < positions; ++p) {
    std::vector<int> word(colors.begin() + static_cast<std::ptrdiff_t>(p),
                          colors.begin() + static_cast<std::ptrdiff_t>(p + shape));
    auto [it, fresh] = ids.emplace(word, g.approx.nodes.size());
    if (fresh) {
      g.approx.nodes.push_back(std::move(word));
      g.approx.first_occurrence.push_back(c.window().at(p));
    }
    g.node_at.push_back(it->second);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p + 1 < positions; ++p) edges.emplace(g.node_at[p], g.node_at[p + 1]);
  g.approx.transitions.assign(edges.begin(), edges.end());
  g.adj.assign(g.approx.nodes.size(), {});
  for (auto [u, v] : edges) g.adj[u].push_back(v);
  return g;
}

bool on_cycle(const PatternGraph& g, std::size_t node) {
  std::vector<char> seen(g.adj.size(), 0);
  std::vector<std::size_t> stack(g.adj[node].begin(), g.adj[node].end());
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    if (v == node) return true;
    if (seen[v]) continue;
    seen[v] = 1;
    for (auto w : g.adj[v]) stack.push_back(w);
  }
  return false;
}

}  // namespace

SubshiftResult furstenberg_subshift(const NatColoring& c, std::size_t shape,
                                    bool assume_eventually_periodic) {
  auto g = build_pattern_graph(c, shape);
  const std::size_t n = g.adj.size();
  std::size_t count = 0;
  const auto comp = detail::scc_ids(g.adj, count);

  std::vector<std::vector<std::size_t>> members(count);
  std::vector<char> cyclic(count, 0);
  for (std::size_t v = 0; v < n; ++v) {
    members[comp[v]].push_back(v);
    for (auto w : g.adj[v])
      if (comp[w] == comp[v]) cyclic[comp[v]] = 1;
  }
  // Cycle-free classes that can only reach removed classes are window-edge
  // artifacts; peel them off until none is left.
  std::vector<char> removed(count, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < count; ++k) {
      if (removed[k] || cyclic[k]) continue;
      bool sink = true;
      for (auto v : members[k])
        for (auto w : g.adj[v]) sink = sink && removed[comp[w]];
      if (sink) {
        removed[k] = 1;
        changed = true;
      }
    }
  }
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < count; ++k) {
    if (removed[k] || !cyclic[k]) continue;
    bool closed = true;
    for (auto v : members[k])
      for (auto w : g.adj[v]) closed = closed && (comp[w] == k || removed[comp[w]]);
    if (!closed) continue;
    auto first = [&](std::size_t kk) {
      Int f = std::numeric_limits<Int>::max();
      for (auto v : members[kk]) f = std::min(f, g.approx.first_occurrence[v]);
      return f;
    };
    if (!best || first(k) < first(*best)) best = k;
  }
  if (!best) throw WindowTooSmall("no recurrent pattern class is visible in the window");

  SubshiftResult r;
  auto& cert = r.certificate;
  auto cls = members[*best];
  std::sort(cls.begin(), cls.end());
  std::size_t eta = cls.front();
  for (auto v : cls)
    if (g.approx.first_occurrence[v] < g.approx.first_occurrence[eta]) eta = v;
  cert.recurrent_class = cls;
  cert.eta = g.approx.nodes[eta];
  cert.eta_position = g.approx.first_occurrence[eta];
  cert.color = cert.eta.front();
  const auto& win = c.window();
  for (std::size_t i = 0; i < win.size(); ++i)
    if (c.color_at(i) == cert.color) cert.S.push_back(win.at(i));
  cert.exact = assume_eventually_periodic;
  cert.label = cert.exact ? "exact: eventually periodic coloring"
                          : "approximation, window-limited";
  r.subshift = std::move(g.approx);
  return r;
}

bool verify_weak_central(const NatColoring& c, const SubshiftResult& r) {
  const auto& cert = r.certificate;
  const auto& win = c.window();
  std::vector<Int> S;
  for (std::size_t i = 0; i < win.size(); ++i)
    if (c.color_at(i) == cert.color) S.push_back(win.at(i));
  if (S != cert.S) return false;
  if (cert.eta.empty() || cert.eta.front() != cert.color) return false;
  const auto start = win.index_of(cert.eta_position);
  if (!start || *start + cert.eta.size() > win.size()) return false;
  for (std::size_t i = 0; i < cert.eta.size(); ++i)
    if (c.color_at(*start + i) != cert.eta[i]) return false;
  const auto g = build_pattern_graph(c, cert.eta.size());
  return on_cycle(g, g.node_at[*start]);
}

PiecewiseResult piecewise_syndetic_check(const std::vector<Int>& S, Interval window, Int k,
                                         Int L) {
  if (k < 1) throw MalformedInput("gap bound k must be positive");
  if (L < 1) throw MalformedInput("run length L must be positive");
  PiecewiseResult r;
  if (window.size() < k) return r;
  std::vector<char> in_s(static_cast<std::size_t>(window.size()), 0);
  for (Int s : S)
    if (window.contains(s)) in_s[static_cast<std::size_t>(s - window.lo)] = 1;
  // prefix counts for O(1) block queries
  std::vector<Int> pre(in_s.size() + 1, 0);
  for (std::size_t i = 0; i < in_s.size(); ++i) pre[i + 1] = pre[i] + in_s[i];
  const Int starts = window.size() - k + 1;
  Int run_start = -1;
  Int best_len = 0;
  auto close_run = [&](Int b1, Int b2) {
    const Interval iv{window.lo + b1, window.lo + b2 + k - 1};
    if (iv.size() > best_len) {
      best_len = iv.size();
      r.witness = iv;
    }
  };
  for (Int t = 0; t < starts; ++t) {
    const bool good = pre[static_cast<std::size_t>(t + k)] - pre[static_cast<std::size_t>(t)] > 0;
    if (good && run_start < 0) run_start = t;
    if (!good && run_start >= 0) {
      close_run(run_start, t - 1);
      run_start = -1;
    }
  }
  if (run_start >= 0) close_run(run_start, starts - 1);
  r.holds = best_len >= L;
  if (!r.holds) r.witness.reset();
  return r;
}

}  // namespace semiramsey
