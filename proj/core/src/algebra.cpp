#include "semiramsey/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "semiramsey/error.hpp"

namespace semiramsey {

void ValidationReport::add(std::string axiom, std::vector<std::size_t> witness) {
  valid = false;
  violations.push_back({std::move(axiom), std::move(witness)});
}

namespace {

void check_square(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    throw MalformedTable(std::string(name) + " table has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(n));
  }
  for (const auto& row : t) {
    if (row.size() != n) {
      throw MalformedTable(std::string(name) + " table is not square");
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw MalformedTable(std::string(name) + " table entry " + std::to_string(v) +
                             " out of range");
      }
    }
  }
}

void check_index(std::size_t v, std::size_t n, const char* name) {
  if (v >= n) throw MalformedTable(std::string(name) + " index out of range");
}

}  // namespace

FiniteSemiring::FiniteSemiring(Table add, Table mul, std::size_t zero, std::size_t unit)
    : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), unit_(unit) {
  if (add_.empty()) throw MalformedTable("semiring must be nonempty");
  check_square(add_, add_.size(), "add");
  check_square(mul_, add_.size(), "mul");
  check_index(zero_, size(), "zero");
  check_index(unit_, size(), "unit");
}

FiniteSemiring FiniteSemiring::adjoin_zero(Table add, Table mul, std::size_t unit) {
  const std::size_t m = add.size();
  check_square(add, m, "add");
  check_square(mul, m, "mul");
  for (std::size_t x = 0; x < m; ++x) {
    add[x].push_back(x);
    mul[x].push_back(m);
  }
  std::vector<std::size_t> add_row(m + 1), mul_row(m + 1, m);
  for (std::size_t x = 0; x <= m; ++x) add_row[x] = x;
  add.push_back(add_row);
  mul.push_back(mul_row);
  FiniteSemiring out(std::move(add), std::move(mul), m, unit);
  out.zero_adjoined_ = true;
  return out;
}

FiniteSemiring FiniteSemiring::boolean() {
  return FiniteSemiring({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

FiniteSemiring FiniteSemiring::integers_mod(std::size_t n) {
  if (n == 0) throw MalformedTable("Z/0 is not finite");
  Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      add[x][y] = (x + y) % n;
      mul[x][y] = (x * y) % n;
    }
  }
  return FiniteSemiring(std::move(add), std::move(mul), 0, 1 % n);
}

FiniteSemimodule::FiniteSemimodule(FiniteSemiring ring, Table add, std::size_t zero,
                                   Table action, Side side)
    : ring_(std::move(ring)), add_(std::move(add)), zero_(zero), side_(side) {
  if (add_.empty()) throw MalformedTable("semimodule must be nonempty");
  check_square(add_, add_.size(), "add");
  check_index(zero_, size(), "zero");
  const std::size_t m = ring_.size();
  const std::size_t g = size();
  const std::size_t rows = side == Side::left ? m : g;
  const std::size_t cols = side == Side::left ? g : m;
  if (action.size() != rows) throw MalformedTable("action table has wrong row count");
  for (const auto& row : action) {
    if (row.size() != cols) throw MalformedTable("action table has wrong column count");
    for (std::size_t v : row) {
      if (v >= g) throw MalformedTable("action table entry out of range");
    }
  }
  if (side == Side::left) {
    action_ = std::move(action);
  } else {
    action_.assign(m, std::vector<std::size_t>(g));
    for (std::size_t e = 0; e < g; ++e) {
      for (std::size_t r = 0; r < m; ++r) action_[r][e] = action[e][r];
    }
  }
}

FiniteSemimodule FiniteSemimodule::regular(const FiniteSemiring& ring) {
  return FiniteSemimodule(ring, ring.add_table(), ring.zero(), ring.mul_table());
}

FiniteSemimodule FiniteSemimodule::boolean_semilattice() {
  return FiniteSemimodule(FiniteSemiring::boolean(), {{0, 1}, {1, 1}}, 0, {{0, 0}, {0, 1}});
}

// ---------------------------------------------------------------------------
// Validation. Each axiom reports its lexicographically first witness.

namespace {

struct Checker {
  ValidationReport& report;

  template <class Pred>
  void unary(const char* axiom, std::size_t n, Pred ok) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!ok(x)) return report.add(axiom, {x});
    }
  }

  template <class Pred>
  void binary(const char* axiom, std::size_t n1, std::size_t n2, Pred ok) {
    for (std::size_t x = 0; x < n1; ++x) {
      for (std::size_t y = 0; y < n2; ++y) {
        if (!ok(x, y)) return report.add(axiom, {x, y});
      }
    }
  }

  template <class Pred>
  void ternary(const char* axiom, std::size_t n1, std::size_t n2, std::size_t n3, Pred ok) {
    for (std::size_t x = 0; x < n1; ++x) {
      for (std::size_t y = 0; y < n2; ++y) {
        for (std::size_t z = 0; z < n3; ++z) {
          if (!ok(x, y, z)) return report.add(axiom, {x, y, z});
        }
      }
    }
  }
};

// Axiom predicates shared by the validator and reproduces().
struct SemiringLaws {
  const FiniteSemiring& r;

  bool add_commutative(std::size_t x, std::size_t y) const { return r.add(x, y) == r.add(y, x); }
  bool add_associative(std::size_t x, std::size_t y, std::size_t z) const {
    return r.add(r.add(x, y), z) == r.add(x, r.add(y, z));
  }
  bool add_identity(std::size_t x) const {
    return r.add(r.zero(), x) == x && r.add(x, r.zero()) == x;
  }
  bool mul_associative(std::size_t x, std::size_t y, std::size_t z) const {
    return r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z));
  }
  bool mul_identity(std::size_t x) const {
    return r.mul(r.unit(), x) == x && r.mul(x, r.unit()) == x;
  }
  bool zero_absorbing(std::size_t x) const {
    return r.mul(r.zero(), x) == r.zero() && r.mul(x, r.zero()) == r.zero();
  }
  bool right_distributive(std::size_t x, std::size_t y, std::size_t z) const {
    return r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z));
  }
  bool left_distributive(std::size_t x, std::size_t y, std::size_t z) const {
    return r.mul(z, r.add(x, y)) == r.add(r.mul(z, x), r.mul(z, y));
  }
};

struct ModuleLaws {
  const FiniteSemimodule& g;

  bool add_commutative(std::size_t x, std::size_t y) const { return g.add(x, y) == g.add(y, x); }
  bool add_associative(std::size_t x, std::size_t y, std::size_t z) const {
    return g.add(g.add(x, y), z) == g.add(x, g.add(y, z));
  }
  bool add_identity(std::size_t x) const {
    return g.add(g.zero(), x) == x && g.add(x, g.zero()) == x;
  }
  // (r+t)x = rx + tx
  bool scalar_sum_distributive(std::size_t r, std::size_t t, std::size_t x) const {
    const auto& R = g.ring();
    return g.act(R.add(r, t), x) == g.add(g.act(r, x), g.act(t, x));
  }
  // r(x+y) = rx + ry
  bool element_sum_distributive(std::size_t r, std::size_t x, std::size_t y) const {
    return g.act(r, g.add(x, y)) == g.add(g.act(r, x), g.act(r, y));
  }
  bool unit_action(std::size_t x) const { return g.act(g.ring().unit(), x) == x; }
  bool zero_action(std::size_t x) const { return g.act(g.ring().zero(), x) == g.zero(); }
};

}  // namespace

ValidationReport validate_structure(const FiniteSemiring& ring) {
  ValidationReport report;
  report.zero_adjoined = ring.zero_adjoined();
  const SemiringLaws law{ring};
  const std::size_t n = ring.size();
  Checker c{report};
  c.binary("add_commutative", n, n, [&](auto x, auto y) { return law.add_commutative(x, y); });
  c.ternary("add_associative", n, n, n,
            [&](auto x, auto y, auto z) { return law.add_associative(x, y, z); });
  c.unary("add_identity", n, [&](auto x) { return law.add_identity(x); });
  c.ternary("mul_associative", n, n, n,
            [&](auto x, auto y, auto z) { return law.mul_associative(x, y, z); });
  c.unary("mul_identity", n, [&](auto x) { return law.mul_identity(x); });
  c.unary("zero_absorbing", n, [&](auto x) { return law.zero_absorbing(x); });
  c.ternary("right_distributive", n, n, n,
            [&](auto x, auto y, auto z) { return law.right_distributive(x, y, z); });
  c.ternary("left_distributive", n, n, n,
            [&](auto x, auto y, auto z) { return law.left_distributive(x, y, z); });
  return report;
}

ValidationReport validate_structure(const FiniteSemimodule& module) {
  ValidationReport report;
  for (auto v : validate_structure(module.ring()).violations) {
    report.add("semiring." + v.axiom, std::move(v.witness));
  }
  report.zero_adjoined = module.ring().zero_adjoined();
  const ModuleLaws law{module};
  const std::size_t g = module.size();
  const std::size_t m = module.ring().size();
  Checker c{report};
  c.binary("add_commutative", g, g, [&](auto x, auto y) { return law.add_commutative(x, y); });
  c.ternary("add_associative", g, g, g,
            [&](auto x, auto y, auto z) { return law.add_associative(x, y, z); });
  c.unary("add_identity", g, [&](auto x) { return law.add_identity(x); });
  c.ternary("scalar_sum_distributive", m, m, g,
            [&](auto r, auto t, auto x) { return law.scalar_sum_distributive(r, t, x); });
  c.ternary("element_sum_distributive", m, g, g,
            [&](auto r, auto x, auto y) { return law.element_sum_distributive(r, x, y); });
  c.unary("unit_action", g, [&](auto x) { return law.unit_action(x); });
  c.unary("zero_action", g, [&](auto x) { return law.zero_action(x); });
  return report;
}

bool reproduces(const FiniteSemiring& ring, const AxiomViolation& v) {
  const SemiringLaws law{ring};
  const auto& w = v.witness;
  const std::size_t n = ring.size();
  if (!std::all_of(w.begin(), w.end(), [n](std::size_t e) { return e < n; })) return false;
  if (v.axiom == "add_commutative" && w.size() == 2) return !law.add_commutative(w[0], w[1]);
  if (v.axiom == "add_associative" && w.size() == 3)
    return !law.add_associative(w[0], w[1], w[2]);
  if (v.axiom == "add_identity" && w.size() == 1) return !law.add_identity(w[0]);
  if (v.axiom == "mul_associative" && w.size() == 3)
    return !law.mul_associative(w[0], w[1], w[2]);
  if (v.axiom == "mul_identity" && w.size() == 1) return !law.mul_identity(w[0]);
  if (v.axiom == "zero_absorbing" && w.size() == 1) return !law.zero_absorbing(w[0]);
  if (v.axiom == "right_distributive" && w.size() == 3)
    return !law.right_distributive(w[0], w[1], w[2]);
  if (v.axiom == "left_distributive" && w.size() == 3)
    return !law.left_distributive(w[0], w[1], w[2]);
  return false;
}

bool reproduces(const FiniteSemimodule& module, const AxiomViolation& v) {
  static constexpr std::string_view prefix = "semiring.";
  if (v.axiom.rfind(prefix, 0) == 0) {
    return reproduces(module.ring(), {v.axiom.substr(prefix.size()), v.witness});
  }
  const ModuleLaws law{module};
  const auto& w = v.witness;
  const std::size_t g = module.size();
  const std::size_t m = module.ring().size();
  auto in = [](std::size_t e, std::size_t n) { return e < n; };
  if (v.axiom == "add_commutative" && w.size() == 2 && in(w[0], g) && in(w[1], g))
    return !law.add_commutative(w[0], w[1]);
  if (v.axiom == "add_associative" && w.size() == 3 && in(w[0], g) && in(w[1], g) &&
      in(w[2], g))
    return !law.add_associative(w[0], w[1], w[2]);
  if (v.axiom == "add_identity" && w.size() == 1 && in(w[0], g))
    return !law.add_identity(w[0]);
  if (v.axiom == "scalar_sum_distributive" && w.size() == 3 && in(w[0], m) && in(w[1], m) &&
      in(w[2], g))
    return !law.scalar_sum_distributive(w[0], w[1], w[2]);
  if (v.axiom == "element_sum_distributive" && w.size() == 3 && in(w[0], m) &&
      in(w[1], g) && in(w[2], g))
    return !law.element_sum_distributive(w[0], w[1], w[2]);
  if (v.axiom == "unit_action" && w.size() == 1 && in(w[0], g)) return !law.unit_action(w[0]);
  if (v.axiom == "zero_action" && w.size() == 1 && in(w[0], g)) return !law.zero_action(w[0]);
  return false;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> nil_set(const FiniteSemiring& ring, std::size_t s) {
  if (s >= ring.size()) throw MalformedInput("element out of range");
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < ring.size(); ++t) {
    if (ring.add(s, t) == ring.zero()) out.push_back(t);
  }
  return out;
}

StarResult check_star_condition(const FiniteSemiring& ring, std::size_t k,
                                std::uint64_t budget) {
  const std::size_t m = ring.size();
  if (k == 0 || k > m) {
    throw MalformedInput("k must satisfy 1 <= k <= |R|");
  }
  // Nil-sets as bitmasks over R.
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nil(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t : nil_set(ring, s)) nil[s][t / 64] |= std::uint64_t{1} << (t % 64);
  }
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (m % 64 != 0) full.back() = (std::uint64_t{1} << (m % 64)) - 1;

  StarResult result;
  std::vector<std::size_t> choice(k, 0);
  std::vector<std::vector<std::uint64_t>> unions(k + 1, std::vector<std::uint64_t>(words, 0));
  // Nondecreasing tuples; unions[i] is the union of the first i nil-sets.
  auto search = [&](auto& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == k) return unions[k] == full;
    for (std::size_t s = start; s < m; ++s) {
      if (++result.nodes > budget) {
        throw BudgetExceeded("star-condition enumeration exceeded node budget", budget);
      }
      choice[depth] = s;
      for (std::size_t w = 0; w < words; ++w) unions[depth + 1][w] = unions[depth][w] | nil[s][w];
      if (self(self, depth + 1, s)) return true;
    }
    return false;
  };
  if (search(search, 0, 0)) {
    result.holds = false;
    result.witness = choice;
  }
  return result;
}

// ---------------------------------------------------------------------------

NatWindow::NatWindow(Int bound) : bound_(bound) {
  if (bound < 0) throw MalformedInput("window bound must be nonnegative");
}

Int NatWindow::add(Int x, Int y) const {
  Int out;
  if (!contains(x) || !contains(y) || __builtin_add_overflow(x, y, &out) || out > bound_) {
    throw Overflow(std::to_string(x) + " + " + std::to_string(y) + " leaves [0, " +
                   std::to_string(bound_) + "]");
  }
  return out;
}

Int NatWindow::mul(Int x, Int y) const {
  Int out;
  if (!contains(x) || !contains(y) || __builtin_mul_overflow(x, y, &out) || out > bound_) {
    throw Overflow(std::to_string(x) + " * " + std::to_string(y) + " leaves [0, " +
                   std::to_string(bound_) + "]");
  }
  return out;
}

VectorNat::VectorNat(std::size_t dim, Int bound) : dim_(dim), scalar_(bound) {
  if (dim == 0) throw MalformedInput("dimension must be positive");
}

bool VectorNat::contains(const Point& x) const {
  return x.size() == dim_ &&
         std::all_of(x.begin(), x.end(), [&](Int v) { return scalar_.contains(v); });
}

Point VectorNat::add(const Point& x, const Point& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw MalformedInput("dimension mismatch");
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = scalar_.add(x[i], y[i]);
  return out;
}

Point VectorNat::mul(const Point& x, const Point& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw MalformedInput("dimension mismatch");
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = scalar_.mul(x[i], y[i]);
  return out;
}

namespace {

Int parse_int(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw MalformedInput("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

WindowedSemiring parse_windowed_semiring(std::string_view preset) {
  auto parts = split(preset, ':');
  if (parts.size() == 2 && parts[0] == "nat") return NatWindow(parse_int(parts[1]));
  if (parts.size() == 3 && parts[0] == "natvec") {
    Int n = parse_int(parts[1]);
    if (n <= 0) throw MalformedInput("natvec dimension must be positive");
    return VectorNat(static_cast<std::size_t>(n), parse_int(parts[2]));
  }
  throw MalformedInput("unknown windowed preset '" + std::string(preset) +
                       "' (expected nat:W or natvec:n:W)");
}

std::vector<Point> nil_set(const WindowedSemiring& ring, const Point& s) {
  const std::size_t dim = std::holds_alternative<NatWindow>(ring)
                              ? 1
                              : std::get<VectorNat>(ring).dim();
  if (s.size() != dim) throw MalformedInput("element has wrong dimension");
  if (std::all_of(s.begin(), s.end(), [](Int v) { return v == 0; })) {
    return {Point(dim, 0)};
  }
  return {};
}

StarResult check_star_condition(const WindowedSemiring&, std::size_t k) {
  if (k == 0) throw MalformedInput("k must be positive");
  StarResult r;
  r.holds = true;
  r.analytic = true;
  return r;
}

Point NatVecModule::add(const Point& g, const Point& h) const {
  if (g.size() != dim_ || h.size() != dim_) throw MalformedInput("dimension mismatch");
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = ring_.add(g[i], h[i]);
  return out;
}

Point NatVecModule::act(Int r, const Point& g) const {
  if (g.size() != dim_) throw MalformedInput("dimension mismatch");
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = ring_.mul(r, g[i]);
  return out;
}

namespace {

template <class Module>
struct LawSampler {
  const Module& mod;
  ValidationReport report;
  bool seen[6] = {};

  static std::vector<std::size_t> witness(std::initializer_list<Point> parts) {
    std::vector<std::size_t> w;
    for (const auto& p : parts)
      for (Int c : p) w.push_back(static_cast<std::size_t>(c));
    return w;
  }
  static Point lift(Int v) { return Point{v}; }
  static Point lift(const Point& v) { return v; }

  void flag(int i, const char* axiom, std::vector<std::size_t> w) {
    if (seen[i]) return;
    seen[i] = true;
    report.add(axiom, std::move(w));
  }

  template <class E>
  void check(const E& g, const E& h, const E& k, Int r, Int t) {
    try {
      if (mod.add(g, h) != mod.add(h, g))
        flag(0, "add_commutative", witness({lift(g), lift(h)}));
      if (mod.add(mod.add(g, h), k) != mod.add(g, mod.add(h, k)))
        flag(1, "add_associative", witness({lift(g), lift(h), lift(k)}));
      if (mod.add(mod.zero(), g) != g) flag(2, "add_identity", witness({lift(g)}));
      if (mod.act(mod.ring().add(r, t), g) != mod.add(mod.act(r, g), mod.act(t, g)))
        flag(3, "scalar_sum_distributive", witness({lift(r), lift(t), lift(g)}));
      if (mod.act(r, mod.add(g, h)) != mod.add(mod.act(r, g), mod.act(r, h)))
        flag(4, "element_sum_distributive", witness({lift(r), lift(g), lift(h)}));
      if (mod.act(1, g) != g || mod.act(0, g) != mod.zero())
        flag(5, "unit_zero_action", witness({lift(g)}));
    } catch (const Overflow&) {
      // The instance left the window; the laws make no claim there.
    }
  }
};

}  // namespace

ValidationReport validate_sampled(const NatModule& module, Int window_hi,
                                  std::size_t samples, std::uint64_t seed) {
  LawSampler<NatModule> s{module, {}};
  if (window_hi < 8) {
    for (Int g = 0; g <= window_hi; ++g)
      for (Int h = 0; h <= window_hi; ++h)
        for (Int k = 0; k <= window_hi; ++k)
          for (Int r = 0; r <= window_hi; ++r)
            for (Int t = 0; t <= window_hi; ++t) s.check(g, h, k, r, t);
    return s.report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> pick(0, window_hi);
  for (std::size_t i = 0; i < samples; ++i) {
    s.check(pick(rng), pick(rng), pick(rng), pick(rng), pick(rng));
  }
  return s.report;
}

ValidationReport validate_sampled(const NatVecModule& module, Int window_hi,
                                  std::size_t samples, std::uint64_t seed) {
  LawSampler<NatVecModule> s{module, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> pick(0, window_hi);
  auto point = [&] {
    Point p(module.dim());
    for (auto& c : p) c = pick(rng);
    return p;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    auto g = point(), h = point(), k = point();
    s.check(g, h, k, pick(rng), pick(rng));
  }
  return s.report;
}

}  // namespace semiramsey
