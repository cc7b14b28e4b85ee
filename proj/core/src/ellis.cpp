#include "semiramsey/ellis.hpp"

#include <algorithm>
#include <unordered_map>

namespace semiramsey {

namespace {

struct MapHash {
  std::size_t operator()(const Map& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : m) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using MapIndex = std::unordered_map<Map, std::size_t, MapHash>;

}  // namespace

std::optional<std::size_t> TransformationSemigroup::index_of(const Map& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return i;
  return std::nullopt;
}

TransformationSemigroup generate_semigroup(std::size_t states, std::vector<Map> generators,
                                          std::size_t max_elements) {
  if (states == 0) throw MalformedInput("state space must be nonempty");
  if (generators.empty()) throw MalformedInput("at least one generator is required");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_map(generators[i], states, "generator " + std::to_string(i + 1));
  }
  // Every word g_k o .. o g_1 is reached by left-multiplying shorter words.
  std::vector<Map> closure;
  MapIndex seen;
  auto admit = [&](Map m) {
    if (seen.count(m)) return;
    if (closure.size() >= max_elements) {
      throw BudgetExceeded("semigroup closure exceeds " + std::to_string(max_elements) +
                               " elements",
                           max_elements);
    }
    seen.emplace(m, closure.size());
    closure.push_back(std::move(m));
  };
  for (const auto& g : generators) admit(g);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const auto& g : generators) admit(compose(g, closure[i]));
  }

  TransformationSemigroup S;
  S.states = states;
  S.generators = std::move(generators);
  const Map id = identity_map(states);
  S.identity_adjoined = !seen.count(id);
  S.elements.reserve(closure.size() + 1);
  S.elements.push_back(id);
  for (auto& m : closure)
    if (m != id) S.elements.push_back(std::move(m));
  return S;
}

IdealReport ideal_analysis(const TransformationSemigroup& S) {
  const std::size_t n = S.elements.size();
  MapIndex index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(S.elements[i], i);

  // left[f] = S o f as sorted element indices.
  std::vector<std::vector<std::size_t>> left(n);
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<char> in(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
      auto it = index.find(compose(S.elements[g], S.elements[f]));
      if (it == index.end()) throw MalformedInput("element set is not closed under composition");
      in[it->second] = 1;
    }
    for (std::size_t h = 0; h < n; ++h)
      if (in[h]) left[f].push_back(h);
  }

  IdealReport r;
  std::vector<char> in_minimal(n, 0);
  for (std::size_t f = 0; f < n; ++f) {
    // S o h is contained in S o f for h in S o f, so equal sizes mean equal sets.
    const bool minimal = std::all_of(left[f].begin(), left[f].end(),
                                     [&](std::size_t h) { return left[h].size() == left[f].size(); });
    if (!minimal) continue;
    if (std::find(r.minimal_left_ideals.begin(), r.minimal_left_ideals.end(), left[f]) ==
        r.minimal_left_ideals.end()) {
      r.minimal_left_ideals.push_back(left[f]);
      for (auto h : left[f]) in_minimal[h] = 1;
    }
  }
  std::sort(r.minimal_left_ideals.begin(), r.minimal_left_ideals.end());
  for (std::size_t u = 0; u < n; ++u) {
    if (compose(S.elements[u], S.elements[u]) == S.elements[u]) {
      r.idempotents.push_back(u);
      if (in_minimal[u]) r.minimal_idempotents.push_back(u);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class ProductSpace {
 public:
  ProductSpace(std::size_t base, std::size_t n) : base_(base), n_(n) {
    size_ = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (size_ > max_product_states / base) {
        throw BudgetExceeded("X^n has too many states", max_product_states);
      }
      size_ *= base;
    }
  }
  std::size_t size() const { return size_; }

  std::size_t encode(const Tuple& t) const {
    std::size_t code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * base_ + t[i];
    return code;
  }
  Tuple decode(std::size_t code) const {
    Tuple t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      t[i] = code % base_;
      code /= base_;
    }
    return t;
  }
  // Coordinate i moves by maps[i].
  std::size_t apply(const std::vector<const Map*>& maps, std::size_t code) const {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += (*maps[i])[code % base_] * scale;
      code /= base_;
      scale *= base_;
    }
    return out;
  }

 private:
  std::size_t base_, n_, size_ = 1;
};

// Vertices reachable from `start` along `step`.
template <class Step>
std::vector<char> reach(std::size_t total, std::size_t start, Step&& step) {
  std::vector<char> seen(total, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    step(v, [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    });
  }
  return seen;
}

}  // namespace

ProductMinimalityReport verify_product_minimality(const FiniteTDS& tds, const std::vector<TimeElement>& T_list,
                             std::vector<Tuple> lambda) {
  const std::size_t n = T_list.size();
  if (n == 0) throw MalformedInput("T_list must be nonempty");
  std::vector<Map> A;
  for (const auto& T : T_list) A.push_back(tds.phi(T));

  const auto span = FiniteTDS::nat(tds.states(), A);
  const auto base_ms = minimal_sets(span);
  if (base_ms.minimal_sets.size() != 1 || base_ms.minimal_sets[0].size() != tds.states()) {
    throw HypothesisFailed("<T_1..T_n> does not act minimally on X");
  }

  const ProductSpace P(tds.states(), n);
  if (lambda.empty()) throw HypothesisFailed("lambda is empty");
  for (const auto& t : lambda) {
    if (t.size() != n) throw MalformedInput("lambda tuples must have n coordinates");
    for (auto x : t)
      if (x >= tds.states()) throw MalformedInput("lambda tuple names an unknown state");
  }
  std::sort(lambda.begin(), lambda.end());
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());

  std::vector<std::vector<const Map*>> diagonal(n, std::vector<const Map*>(n));
  std::vector<const Map*> xi(n);
  for (std::size_t i = 0; i < n; ++i) {
    xi[i] = &A[i];
    for (std::size_t j = 0; j < n; ++j) diagonal[i][j] = &A[i];
  }

  // lambda must be theta-minimal: closed under the diagonal maps and one
  // mutual-reachability class under them.
  std::vector<char> in_lambda(P.size(), 0);
  for (const auto& t : lambda) in_lambda[P.encode(t)] = 1;
  auto theta_step = [&](std::size_t v, auto&& visit) {
    for (const auto& d : diagonal) visit(P.apply(d, v));
  };
  for (const auto& t : lambda) {
    const auto code = P.encode(t);
    for (const auto& d : diagonal) {
      if (!in_lambda[P.apply(d, code)]) throw HypothesisFailed("lambda is not theta-invariant");
    }
  }
  const auto l0 = P.encode(lambda.front());
  const auto from_l0 = reach(P.size(), l0, theta_step);
  for (const auto& t : lambda) {
    if (!from_l0[P.encode(t)]) throw HypothesisFailed("lambda is not theta-minimal");
    const auto from_t = reach(P.size(), P.encode(t), theta_step);
    if (!from_t[l0]) throw HypothesisFailed("lambda is not theta-minimal");
  }

  ProductMinimalityReport r;
  r.n = n;
  r.lambda = lambda;

  // sigma = union over t of xi^t[lambda].
  std::vector<char> in_sigma(P.size(), 0);
  std::vector<std::size_t> stack;
  for (const auto& t : lambda) {
    const auto c = P.encode(t);
    if (!in_sigma[c]) {
      in_sigma[c] = 1;
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    const auto w = P.apply(xi, v);
    if (!in_sigma[w]) {
      in_sigma[w] = 1;
      stack.push_back(w);
    }
  }
  std::vector<std::size_t> sigma_codes;
  for (std::size_t c = 0; c < P.size(); ++c)
    if (in_sigma[c]) sigma_codes.push_back(c);
  for (auto c : sigma_codes) r.sigma.push_back(P.decode(c));
  std::sort(r.sigma.begin(), r.sigma.end());

  r.sigma_contains_lambda = std::all_of(lambda.begin(), lambda.end(),
                                        [&](const Tuple& t) { return in_sigma[P.encode(t)]; });
  r.xi_invariant = true;
  r.theta_invariant = true;
  r.xi_theta_commute = true;
  for (auto c : sigma_codes) {
    const auto xc = P.apply(xi, c);
    r.xi_invariant = r.xi_invariant && in_sigma[xc];
    for (const auto& d : diagonal) {
      const auto dc = P.apply(d, c);
      r.theta_invariant = r.theta_invariant && in_sigma[dc];
      r.xi_theta_commute = r.xi_theta_commute && P.apply(xi, dc) == P.apply(d, xc);
    }
  }

  // Mutual reachability under {xi, theta_i}: forward and backward from one
  // point covers every pair.
  std::vector<std::vector<std::size_t>> back(P.size());
  auto family_step = [&](std::size_t v, auto&& visit) {
    visit(P.apply(xi, v));
    for (const auto& d : diagonal) visit(P.apply(d, v));
  };
  for (auto c : sigma_codes) family_step(c, [&](std::size_t w) { back[w].push_back(c); });
  const auto s0 = sigma_codes.front();
  const auto fwd = reach(P.size(), s0, family_step);
  const auto bwd = reach(P.size(), s0, [&](std::size_t v, auto&& visit) {
    for (auto w : back[v]) visit(w);
  });
  r.minimal = true;
  for (auto c : sigma_codes) {
    if (!fwd[c]) {
      r.unreachable = std::make_pair(P.decode(s0), P.decode(c));
      r.minimal = false;
      break;
    }
    if (!bwd[c]) {
      r.unreachable = std::make_pair(P.decode(c), P.decode(s0));
      r.minimal = false;
      break;
    }
  }
  r.passed = r.sigma_contains_lambda && r.xi_invariant && r.theta_invariant && r.xi_theta_commute &&
             r.minimal;
  return r;
}

}  // namespace semiramsey
