#include "semiramsey/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "detail/graph.hpp"

namespace semiramsey {

namespace {

constexpr std::uint64_t max_period = 10'000'000;

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

FiniteTDS FiniteTDS::nat(std::size_t states, std::vector<Map> generators) {
  if (states == 0) throw MalformedInput("state space must be nonempty");
  if (generators.empty()) throw MalformedInput("at least one generator is required");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_map(generators[i], states, "generator " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const auto& a = generators[i];
      const auto& b = generators[j];
      for (std::size_t x = 0; x < states; ++x) {
        if (a[b[x]] != b[a[x]]) throw NonCommuting(i + 1, j + 1, x);
      }
    }
  }
  return FiniteTDS(states, std::move(generators), std::nullopt);
}

FiniteTDS FiniteTDS::finite(std::size_t states, FiniteSemimodule time, std::vector<Map> maps) {
  if (states == 0) throw MalformedInput("state space must be nonempty");
  const std::size_t g = time.size();
  if (maps.size() != g) {
    throw MalformedInput("finite time needs one map per element of G (" + std::to_string(g) +
                         "), got " + std::to_string(maps.size()));
  }
  for (std::size_t i = 0; i < g; ++i) check_map(maps[i], states, "map of element " + std::to_string(i));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      for (std::size_t x = 0; x < states; ++x) {
        if (maps[i][maps[j][x]] != maps[j][maps[i][x]]) throw NonCommuting(i, j, x);
      }
    }
  }
  const auto& e = maps[time.zero()];
  for (std::size_t x = 0; x < states; ++x) {
    if (e[x] != x) {
      throw MalformedInput("action law fails: phi(zero) moves state " + std::to_string(x));
    }
  }
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      const auto& sum = maps[time.add(a, b)];
      for (std::size_t x = 0; x < states; ++x) {
        if (sum[x] != maps[a][maps[b][x]]) {
          throw MalformedInput("action law phi(g+h) = phi(g) o phi(h) fails at g=" +
                               std::to_string(a) + ", h=" + std::to_string(b) +
                               ", x=" + std::to_string(x));
        }
      }
    }
  }
  return FiniteTDS(states, std::move(maps), std::move(time));
}

void FiniteTDS::check_time(const TimeElement& T) const {
  if (time_) {
    if (T.size() != 1 || T[0] < 0 || static_cast<std::size_t>(T[0]) >= time_->size()) {
      throw MalformedInput("finite-time element must be one index of G");
    }
    return;
  }
  if (T.size() != maps_.size()) {
    throw MalformedInput("time element needs one coefficient per generator (" +
                         std::to_string(maps_.size()) + ")");
  }
  for (Int c : T) {
    if (c < 0) throw MalformedInput("time coefficients must lie in Z_+");
  }
}

void FiniteTDS::check_states(const std::vector<std::size_t>& subset, const char* what) const {
  for (auto x : subset) {
    if (x >= states_) throw MalformedInput(std::string(what) + " contains an unknown state");
  }
}

Map FiniteTDS::phi(const TimeElement& T) const {
  check_time(T);
  if (time_) return maps_[static_cast<std::size_t>(T[0])];
  Map out = identity_map(states_);
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (T[i] != 0) out = compose(map_power(maps_[i], static_cast<std::uint64_t>(T[i])), out);
  }
  return out;
}

Map FiniteTDS::phi(const TimeElement& T, Int t) const {
  check_time(T);
  if (time_) {
    if (t < 0 || static_cast<std::size_t>(t) >= time_->ring().size()) {
      throw MalformedInput("scalar t out of range for the time semiring");
    }
    return maps_[time_->act(static_cast<std::size_t>(t), static_cast<std::size_t>(T[0]))];
  }
  if (t < 0) throw MalformedInput("t must lie in Z_+");
  return map_power(phi(T), static_cast<std::uint64_t>(t));
}

TimeElement FiniteTDS::generator(std::size_t i) const {
  if (i >= maps_.size()) throw MalformedInput("generator index out of range");
  if (time_) return {static_cast<Int>(i)};
  TimeElement e(maps_.size(), 0);
  e[i] = 1;
  return e;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> orbit(const FiniteTDS& tds, std::size_t x) {
  if (x >= tds.states()) throw MalformedInput("state out of range");
  std::vector<char> seen(tds.states(), 0);
  std::vector<std::size_t> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    const auto y = stack.back();
    stack.pop_back();
    for (const auto& m : tds.acting_maps()) {
      if (!seen[m[y]]) {
        seen[m[y]] = 1;
        stack.push_back(m[y]);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < tds.states(); ++y)
    if (seen[y]) out.push_back(y);
  return out;
}

FiniteTDS subsystem(const FiniteTDS& tds, const std::vector<std::size_t>& Y) {
  tds.check_states(Y, "subsystem");
  constexpr std::uint32_t absent = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(tds.states(), absent);
  for (std::size_t i = 0; i < Y.size(); ++i) {
    if (label[Y[i]] != absent) throw MalformedInput("subsystem lists a state twice");
    label[Y[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Map> maps;
  for (const auto& m : tds.acting_maps()) {
    Map r(Y.size());
    for (std::size_t i = 0; i < Y.size(); ++i) {
      r[i] = label[m[Y[i]]];
      if (r[i] == absent) throw MalformedInput("subsystem states are not invariant");
    }
    maps.push_back(std::move(r));
  }
  if (tds.finite_time()) return FiniteTDS::finite(Y.size(), *tds.time(), std::move(maps));
  return FiniteTDS::nat(Y.size(), std::move(maps));
}

MinimalSetReport minimal_sets(const FiniteTDS& tds) {
  // A strongly connected class of x -> m(x) with no edge leaving it is
  // orbit-closed, hence minimal.
  const std::size_t n = tds.states();
  const auto& maps = tds.acting_maps();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& m : maps) adj[x].push_back(m[x]);
  std::size_t count = 0;
  const auto comp = detail::scc_ids(adj, count);
  std::vector<char> closed(count, 1);
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t x = 0; x < n; ++x) {
    members[comp[x]].push_back(x);
    for (auto y : adj[x])
      if (comp[y] != comp[x]) closed[comp[x]] = 0;
  }
  MinimalSetReport report;
  report.membership.assign(n, std::nullopt);
  for (std::size_t c = 0; c < count; ++c)
    if (closed[c]) report.minimal_sets.push_back(members[c]);
  std::sort(report.minimal_sets.begin(), report.minimal_sets.end());
  for (std::size_t i = 0; i < report.minimal_sets.size(); ++i) {
    for (auto v : report.minimal_sets[i]) report.membership[v] = i;
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Membership {
  std::vector<char> in_u;
  const std::vector<std::size_t>& U;

  // First x in U with every power landing in U.
  std::optional<std::size_t> witness(const std::vector<Map>& powers) const {
    for (auto x : U) {
      bool ok = true;
      for (const auto& p : powers) {
        if (!in_u[p[x]]) {
          ok = false;
          break;
        }
      }
      if (ok) return x;
    }
    return std::nullopt;
  }
};

std::vector<Int> iota_k(Int k) {
  std::vector<Int> K(static_cast<std::size_t>(k + 1));
  for (Int i = 0; i <= k; ++i) K[static_cast<std::size_t>(i)] = i;
  return K;
}

void hitting_nat(const FiniteTDS& tds, HittingSet& h, const Membership& mem) {
  std::vector<Map> base;
  std::uint64_t mu = 0, lambda = 1;
  for (const auto& T : h.T_list) {
    base.push_back(tds.phi(T));
    const auto pc = power_cycle(base.back());
    mu = std::max(mu, pc.preperiod);
    lambda = std::lcm(lambda, pc.period);
    if (lambda > max_period) throw BudgetExceeded("joint period of the sampled maps is too long", max_period);
  }
  h.preperiod = mu;
  h.period = lambda;

  // Exact membership on [0, horizon]; beyond it t reduces into one period.
  const Int horizon = static_cast<Int>(2 * mu + 2 * lambda);
  std::vector<std::optional<std::size_t>> member(static_cast<std::size_t>(horizon + 1));
  std::vector<Map> powers(base.size(), identity_map(tds.states()));
  for (Int t = 0; t <= horizon; ++t) {
    member[static_cast<std::size_t>(t)] = mem.witness(powers);
    for (std::size_t i = 0; i < base.size(); ++i) powers[i] = compose(base[i], powers[i]);
  }
  auto at = [&](Int t) -> const std::optional<std::size_t>& {
    if (t > horizon) t = static_cast<Int>(mu) + (t - static_cast<Int>(mu)) % static_cast<Int>(lambda);
    return member[static_cast<std::size_t>(t)];
  };
  for (Int t = std::max<Int>(0, h.window.lo); t <= h.window.hi; ++t) {
    if (const auto& w = at(t)) {
      h.N.push_back(t);
      h.witnesses.push_back(*w);
    }
  }

  // Gap bound k over [0, mu + 2 lambda - 1]: two periods expose every gap of
  // the periodic tail, the leading run included.
  const Int two_periods = static_cast<Int>(mu + 2 * lambda) - 1;
  std::vector<Int> D;
  for (Int t = 0; t <= horizon; ++t)
    if (member[static_cast<std::size_t>(t)]) D.push_back(t);
  const bool tail_nonempty = std::any_of(D.begin(), D.end(), [&](Int t) {
    return t >= static_cast<Int>(mu) && t < static_cast<Int>(mu + lambda);
  });
  auto& cert = h.certificate;
  if (!tail_nonempty) {
    // N is finite: no K works. Every translate from mu on misses N.
    cert.D = D;
    cert.window = Interval{0, horizon};
    cert.checked = Interval{0, horizon};
    cert.verified = false;
    cert.failing_t = static_cast<Int>(mu);
    return;
  }
  Int k = D.front();
  for (std::size_t i = 1; i < D.size() && D[i] <= two_periods; ++i) k = std::max(k, D[i] - D[i - 1] - 1);
  // Translates t in [0, mu + lambda - 1] represent every t >= 0.
  const Int hi = static_cast<Int>(mu + lambda) - 1 + k;
  std::vector<Int> D_cert;
  for (Int t : D)
    if (t <= hi) D_cert.push_back(t);
  const auto K = iota_k(k);
  cert = check_syndetic(D_cert, Interval{0, hi}, K);
}

void hitting_finite(const FiniteTDS& tds, HittingSet& h, const Membership& mem) {
  const auto& ring = tds.time()->ring();
  const auto m = static_cast<Int>(ring.size());
  h.window = Interval{0, m - 1};
  std::vector<Int> all;
  for (Int t = 0; t < m; ++t) {
    std::vector<Map> powers;
    for (const auto& T : h.T_list) powers.push_back(tds.phi(T, t));
    if (auto w = mem.witness(powers)) {
      h.N.push_back(t);
      h.witnesses.push_back(*w);
    }
  }
  auto& cert = h.certificate;
  if (auto K = find_syndetic_set(ring, h.N)) {
    cert = check_syndetic(ring, h.N, *K);
  } else {
    cert.D = h.N;
    cert.window = Interval{0, m - 1};
    cert.checked = cert.window;
    cert.verified = false;
    // First translate whose whole additive orbit avoids N.
    std::vector<char> in_n(static_cast<std::size_t>(m), 0);
    for (Int t : h.N) in_n[static_cast<std::size_t>(t)] = 1;
    for (Int t = 0; t < m && !cert.failing_t; ++t) {
      bool reaches = false;
      for (Int k = 0; k < m && !reaches; ++k) {
        reaches = in_n[ring.add(static_cast<std::size_t>(k), static_cast<std::size_t>(t))];
      }
      if (!reaches) cert.failing_t = t;
    }
  }
}

}  // namespace

HittingSet hitting_time_set(const FiniteTDS& tds, std::vector<std::size_t> U,
                            const std::vector<TimeElement>& T_list, Interval window,
                            HittingOptions opts) {
  U = sorted_unique(std::move(U));
  if (U.empty()) throw EmptyU();
  tds.check_states(U, "U");
  if (T_list.empty()) throw MalformedInput("T_list must be nonempty");
  for (const auto& T : T_list) tds.check_time(T);
  if (!tds.finite_time() && window.lo < 0) throw MalformedInput("t window must lie in Z_+");

  HittingSet h;
  h.T_list = T_list;
  h.window = window;
  const auto ms = minimal_sets(tds);
  std::optional<std::size_t> first_minimal;
  for (auto x : U) {
    if (ms.membership[x] && (!first_minimal || *ms.membership[x] < *first_minimal)) {
      first_minimal = ms.membership[x];
    }
  }
  h.not_minimal = !first_minimal.has_value();
  if (opts.restrict_to_minimal && first_minimal) {
    std::vector<std::size_t> restricted;
    for (auto x : U)
      if (ms.membership[x] == first_minimal) restricted.push_back(x);
    U = std::move(restricted);
    h.restricted = true;
  }
  h.U = U;

  Membership mem{std::vector<char>(tds.states(), 0), h.U};
  for (auto x : h.U) mem.in_u[x] = 1;
  if (tds.finite_time()) {
    hitting_finite(tds, h, mem);
  } else {
    hitting_nat(tds, h, mem);
  }
  return h;
}

bool verify_hitting_witnesses(const FiniteTDS& tds, const HittingSet& h) {
  if (h.N.size() != h.witnesses.size()) return false;
  std::vector<char> in_u(tds.states(), 0);
  for (auto x : h.U) in_u[x] = 1;
  for (std::size_t i = 0; i < h.N.size(); ++i) {
    const auto x = h.witnesses[i];
    if (x >= tds.states() || !in_u[x]) return false;
    for (const auto& T : h.T_list) {
      if (!in_u[tds.phi(T, h.N[i])[x]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Shortest time element taking y to x (BFS over generator steps), or, for
// finite time, the first element of G doing so.
std::optional<TimeElement> time_to(const FiniteTDS& tds, std::size_t y, std::size_t x) {
  const auto& maps = tds.acting_maps();
  if (tds.finite_time()) {
    for (std::size_t g = 0; g < maps.size(); ++g)
      if (maps[g][y] == x) return TimeElement{static_cast<Int>(g)};
    return std::nullopt;
  }
  std::vector<std::optional<TimeElement>> reach(tds.states());
  std::deque<std::size_t> queue{y};
  reach[y] = TimeElement(maps.size(), 0);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == x) return reach[v];
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const auto w = maps[i][v];
      if (!reach[w]) {
        reach[w] = reach[v];
        ++(*reach[w])[i];
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RecurrenceReport uniform_recurrence(const FiniteTDS& tds, std::size_t x,
                                    std::optional<Interval> window) {
  if (x >= tds.states()) throw MalformedInput("state out of range");
  RecurrenceReport r;
  r.x = x;
  const auto ms = minimal_sets(tds);
  r.minimal_set = ms.membership[x];
  r.recurrent = r.minimal_set.has_value();

  if (!tds.finite_time() && tds.generator_count() == 1) {
    const auto pc = power_cycle(tds.acting_maps()[0]);
    const Interval w = window.value_or(Interval{0, static_cast<Int>(pc.preperiod + 2 * pc.period) - 1});
    r.return_times = hitting_time_set(tds, {x}, {tds.generator(0)}, w);
  }

  if (r.recurrent) {
    const auto orb = orbit(tds, x);
    std::set<TimeElement> K;
    for (auto y : orb) {
      if (auto t = time_to(tds, y, x)) K.insert(*t);
    }
    r.K.assign(K.begin(), K.end());
    r.K_verified = true;
    for (auto y : orb) {
      bool hit = false;
      for (const auto& k : r.K) hit = hit || tds.phi(k)[y] == x;
      r.K_verified = r.K_verified && hit;
    }
  }
  return r;
}

CoverResult cover_recurrence(const FiniteTDS& tds,
                             const std::vector<std::vector<std::size_t>>& cover,
                             const std::vector<TimeElement>& T_list, Interval window) {
  std::vector<char> covered(tds.states(), 0);
  for (const auto& U : cover) {
    tds.check_states(U, "cover member");
    for (auto x : U) covered[x] = 1;
  }
  for (std::size_t x = 0; x < tds.states(); ++x) {
    if (!covered[x]) throw NotACover(x);
  }
  const auto ms = minimal_sets(tds);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (auto x : cover[i]) {
      if (ms.membership[x]) return CoverResult{i, hitting_time_set(tds, cover[i], T_list, window)};
    }
  }
  // A finite nonempty X always has a minimal set, and the cover meets it.
  throw std::logic_error("cover misses every minimal set");
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(Table op, std::size_t identity) : op_(std::move(op)), identity_(identity) {
  const std::size_t n = op_.size();
  if (n == 0) throw MalformedTable("group table must be nonempty");
  for (const auto& row : op_) {
    if (row.size() != n) throw MalformedTable("group table must be square");
    for (auto v : row)
      if (v >= n) throw MalformedTable("group table entry out of range");
  }
  if (identity_ >= n) throw MalformedTable("group identity out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (op_[identity_][a] != a || op_[a][identity_] != a) {
      throw MalformedTable("element " + std::to_string(identity_) + " is not a two-sided identity");
    }
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || op_[a][b] == identity_;
    if (!has_inverse) throw MalformedTable("element " + std::to_string(a) + " has no inverse");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op_[op_[a][b]][c] != op_[a][op_[b][c]]) {
          throw MalformedTable("group law is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw MalformedInput("cyclic group order must be positive");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::klein4() {
  Table t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup(std::move(t), 0);
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (op_[a][b] == identity_) return b;
  throw std::logic_error("validated group element without inverse");
}

namespace {

std::vector<Map> lift_generators(const FiniteTDS& base, const FiniteGroup& group,
                                 const std::vector<std::vector<std::size_t>>& psi) {
  const std::size_t n = base.states(), m = group.size();
  std::vector<Map> lifted;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Map s(n * m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < m; ++k)
        s[x * m + k] = static_cast<std::uint32_t>(base.acting_maps()[i][x] * m + group.op(psi[i][x], k));
    lifted.push_back(std::move(s));
  }
  return lifted;
}

void check_psi_shape(const FiniteTDS& base, const FiniteGroup& group,
                     const std::vector<std::vector<std::size_t>>& psi, std::size_t rows) {
  if (base.finite_time()) throw MalformedInput("skew products need Z_+^k time");
  if (psi.size() != rows) throw MalformedInput("cocycle needs " + std::to_string(rows) + " rows");
  for (const auto& row : psi) {
    if (row.size() != base.states()) throw MalformedInput("cocycle row must cover every state");
    for (auto v : row)
      if (v >= group.size()) throw MalformedInput("cocycle value outside the group");
  }
}

}  // namespace

SkewProduct build_skew_product(const FiniteTDS& base, const FiniteGroup& group,
                               std::vector<std::vector<std::size_t>> psi) {
  check_psi_shape(base, group, psi, base.generator_count());
  const auto& T = base.acting_maps();
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.size(); ++j) {
      for (std::size_t x = 0; x < base.states(); ++x) {
        // psi(T_i + T_j, x) computed both ways.
        const auto ij = group.op(psi[i][T[j][x]], psi[j][x]);
        const auto ji = group.op(psi[j][T[i][x]], psi[i][x]);
        if (ij != ji) throw CocycleViolation(static_cast<Int>(i + 1), static_cast<Int>(j + 1), x);
      }
    }
  }
  auto lifted = lift_generators(base, group, psi);
  auto product = FiniteTDS::nat(base.states() * group.size(), std::move(lifted));
  return SkewProduct{base, group, std::move(psi), std::move(product)};
}

SkewProduct build_skew_product_from_times(const FiniteTDS& base, const FiniteGroup& group,
                                          const std::vector<std::vector<std::size_t>>& psi_times) {
  if (base.generator_count() != 1) throw MalformedInput("all-times cocycles need one generator");
  if (psi_times.size() < 2) throw MalformedInput("all-times cocycle needs t = 0 and t = 1");
  check_psi_shape(base, group, psi_times, psi_times.size());
  const auto& T = base.acting_maps()[0];
  const auto W = static_cast<Int>(psi_times.size()) - 1;
  for (std::size_t x = 0; x < base.states(); ++x) {
    if (psi_times[0][x] != group.identity()) throw CocycleViolation(0, 0, x);
  }
  for (Int s = 0; s <= W; ++s) {
    const Map Ts = map_power(T, static_cast<std::uint64_t>(s));
    for (Int t = 0; s + t <= W; ++t) {
      for (std::size_t x = 0; x < base.states(); ++x) {
        const auto lhs = psi_times[static_cast<std::size_t>(s + t)][x];
        const auto rhs = group.op(psi_times[static_cast<std::size_t>(t)][Ts[x]],
                                  psi_times[static_cast<std::size_t>(s)][x]);
        if (lhs != rhs) throw CocycleViolation(s, t, x);
      }
    }
  }
  return build_skew_product(base, group, {psi_times[1]});
}

std::size_t cocycle_value(const SkewProduct& skew, const TimeElement& T, std::size_t x) {
  if (x >= skew.base.states()) throw MalformedInput("state out of range");
  const auto image = skew.product.phi(T)[skew.state(x, skew.group.identity())];
  return image % skew.group.size();
}

LiftReport verify_uniform_recurrence_lift(const SkewProduct& skew, std::size_t x0) {
  const auto base_ms = minimal_sets(skew.base);
  if (x0 >= skew.base.states()) throw MalformedInput("state out of range");
  if (!base_ms.membership[x0]) throw BaseNotRecurrent(x0);

  const auto ms = minimal_sets(skew.product);
  const std::size_t m = skew.group.size();
  LiftReport r;
  r.x0 = x0;
  r.all_recurrent = true;
  for (std::size_t k = 0; k < m; ++k) {
    const bool rec = ms.membership[skew.state(x0, k)].has_value();
    r.fiber_recurrent.push_back(rec);
    r.all_recurrent = r.all_recurrent && rec;
  }

  r.rotations_commute = true;
  for (std::size_t kp = 0; kp < m; ++kp) {
    for (const auto& S : skew.product.acting_maps()) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        const std::size_t x = s / m, k = s % m;
        const auto rotated = skew.state(x, skew.group.op(k, kp));
        const auto img = S[s];
        const auto expect = skew.state(img / m, skew.group.op(img % m, kp));
        r.rotations_commute = r.rotations_commute && S[rotated] == expect;
      }
    }
  }

  r.projections_minimal = true;
  for (const auto& Y : ms.minimal_sets) {
    std::vector<std::size_t> proj;
    for (auto s : Y) proj.push_back(s / m);
    proj = sorted_unique(std::move(proj));
    const auto idx = base_ms.membership[proj.front()];
    r.projections_minimal = r.projections_minimal && idx && base_ms.minimal_sets[*idx] == proj;
  }
  return r;
}

}  // namespace semiramsey
