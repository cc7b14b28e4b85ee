#include "semiramsey/oracle.hpp"

#include <algorithm>
#include <json.hpp>

#include "semiramsey/grunwald.hpp"

namespace semiramsey {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Naive references.

std::optional<Int> naive_grunwald(int q, const std::vector<Int>& F, Int n_max,
                                  std::uint64_t budget) {
  if (q < 1) throw MalformedInput("q must be at least 1");
  if (F.empty()) throw MalformedInput("F must be nonempty");
  std::uint64_t total = 0;
  for (Int n = 1; n <= n_max; ++n) {
    std::uint64_t count = 1;
    for (Int i = 0; i < n; ++i) {
      if (count > budget) break;
      count *= static_cast<std::uint64_t>(q);
    }
    total += count;
    if (total > budget) {
      throw BudgetExceeded("naive Grünwald enumeration exceeds the coloring budget", budget);
    }
  }
  const Int fmax = *std::max_element(F.begin(), F.end());
  for (Int n = 1; n <= n_max; ++n) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    bool every_coloring_has_copy = true;
    while (true) {
      bool has_copy = false;
      for (Int d = 1; d <= n && !has_copy; ++d) {
        for (Int a = 0; a + d * fmax <= n - 1 && !has_copy; ++a) {
          bool mono = true;
          for (Int f : F) {
            mono = mono && colors[static_cast<std::size_t>(a + d * f)] ==
                               colors[static_cast<std::size_t>(a + d * F.front())];
          }
          has_copy = mono;
        }
      }
      if (!has_copy) {
        every_coloring_has_copy = false;
        break;
      }
      // next coloring, base-q counter
      std::size_t i = 0;
      while (i < colors.size() && colors[i] == q - 1) colors[i++] = 0;
      if (i == colors.size()) break;
      ++colors[i];
    }
    if (every_coloring_has_copy) return n;
  }
  return std::nullopt;
}

std::optional<NaiveMono> naive_mono(const std::vector<int>& colors, Int lo,
                                    const std::vector<Int>& F, const std::vector<Int>& d_values,
                                    bool allow_zero_d) {
  const Int hi = lo + static_cast<Int>(colors.size()) - 1;
  for (Int d : d_values) {
    if (d == 0 && !allow_zero_d) continue;
    for (Int a = lo; a <= hi; ++a) {
      bool inside = true;
      for (Int f : F) inside = inside && a + d * f >= lo && a + d * f <= hi;
      if (!inside) continue;
      const int c = colors[static_cast<std::size_t>(a + d * F.front() - lo)];
      bool mono = true;
      for (Int f : F) mono = mono && colors[static_cast<std::size_t>(a + d * f - lo)] == c;
      if (mono) return NaiveMono{c, a, d};
    }
  }
  return std::nullopt;
}

std::vector<Int> naive_diffset(const std::vector<int>& colors, Int lo, const std::vector<Int>& F,
                               int j, const std::vector<Int>& d_values, bool allow_zero_d) {
  const Int hi = lo + static_cast<Int>(colors.size()) - 1;
  std::vector<Int> D;
  for (Int d : d_values) {
    if (d == 0 && !allow_zero_d) continue;
    bool found = false;
    for (Int a = lo; a <= hi && !found; ++a) {
      bool ok = true;
      for (Int f : F) {
        const Int x = a + d * f;
        ok = ok && x >= lo && x <= hi && colors[static_cast<std::size_t>(x - lo)] == j;
      }
      found = ok;
    }
    if (found) D.push_back(d);
  }
  return D;
}

std::vector<Int> naive_hitting(const FiniteTDS& tds, const std::vector<std::size_t>& U,
                               const std::vector<TimeElement>& T_list, Interval window) {
  std::vector<char> in_u(tds.states(), 0);
  for (auto x : U) in_u[x] = 1;
  const auto& maps = tds.acting_maps();
  std::vector<Int> N;
  for (Int t = window.lo; t <= window.hi; ++t) {
    if (tds.finite_time() && (t < 0 || static_cast<std::size_t>(t) >= tds.time()->ring().size())) {
      continue;
    }
    bool hit = false;
    for (std::size_t x : U) {
      bool all = true;
      for (const auto& T : T_list) {
        std::size_t y = x;
        if (tds.finite_time()) {
          y = maps[tds.time()->act(static_cast<std::size_t>(t), static_cast<std::size_t>(T[0]))][y];
        } else {
          for (std::size_t i = 0; i < T.size(); ++i)
            for (Int s = 0; s < T[i] * t; ++s) y = maps[i][y];
        }
        all = all && in_u[y];
      }
      if (all) {
        hit = true;
        break;
      }
    }
    if (hit) N.push_back(t);
  }
  return N;
}

// ---------------------------------------------------------------------------

Suite parse_suite(const std::string& name) {
  if (name == "mono") return Suite::mono;
  if (name == "diffset") return Suite::diffset;
  if (name == "hitting") return Suite::hitting;
  if (name == "grunwald") return Suite::grunwald;
  throw MalformedInput("unknown suite '" + name + "' (mono, diffset, hitting, grunwald)");
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::mono: return "mono";
    case Suite::diffset: return "diffset";
    case Suite::hitting: return "hitting";
    case Suite::grunwald: return "grunwald";
  }
  return "?";
}

std::size_t default_instances(Suite suite) {
  switch (suite) {
    case Suite::mono: return 100;
    case Suite::diffset: return 100;
    case Suite::hitting: return 50;
    case Suite::grunwald: return 12;
  }
  return 0;
}

Engines Engines::optimized() {
  Engines e;
  e.mono = [](const NatColoring& c, const ConfigSet<Int>& F, std::span<const Int> d) {
    std::optional<NaiveMono> out;
    if (auto w = find_mono_copy(NatModule{}, c, F, d)) out = NaiveMono{w->color, w->copy.a, w->copy.d};
    return out;
  };
  e.diffset = [](const NatColoring& c, const ConfigSet<Int>& F, int j, std::span<const Int> d) {
    return diff_set(NatModule{}, c, F, j, d).D;
  };
  e.hitting = [](const FiniteTDS& tds, const std::vector<std::size_t>& U,
                 const std::vector<TimeElement>& T, Interval w) {
    return hitting_time_set(tds, U, T, w).N;
  };
  e.grunwald = [](int q, const ConfigSet<Int>& F, Int n_max) -> std::optional<Int> {
    GrunwaldOptions opts;
    opts.max_n = n_max;
    const auto r = grunwald_number(q, F, opts);
    if (r.exceeds_max_n) return std::nullopt;
    return r.N;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Instances.

namespace {

Map random_map(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  Map m(n);
  if (std::bernoulli_distribution(0.5)(rng)) {
    m = identity_map(n);
    std::shuffle(m.begin(), m.end(), rng);
  } else {
    for (auto& v : m) v = pick(rng);
  }
  return m;
}

// f x g on A x B, state (a, b) = a * |B| + b.
Map product_map(const Map& f, const Map& g) {
  Map out(f.size() * g.size());
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) out[a * g.size() + b] = static_cast<std::uint32_t>(f[a] * g.size() + g[b]);
  return out;
}

std::vector<Int> random_subset(std::mt19937_64& rng, Int lo, Int hi, std::size_t k) {
  std::vector<Int> all;
  for (Int v = lo; v <= hi; ++v) all.push_back(v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

json coloring_instance(std::mt19937_64& rng, Suite suite) {
  const Int n = uniform(rng, 3, 30);
  const int q = static_cast<int>(uniform(rng, 1, 3));
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = static_cast<int>(uniform(rng, 1, q));
  const auto F = random_subset(rng, 0, 5, static_cast<std::size_t>(uniform(rng, 1, 3)));
  json inst = {{"suite", to_string(suite)}, {"window", {0, n - 1}}, {"q", q},
               {"colors", colors}, {"F", F}, {"d", {1, n}}};
  if (suite == Suite::diffset) inst["j"] = uniform(rng, 1, q);
  return inst;
}

json tds_json(const FiniteTDS& tds) {
  return {{"states", tds.states()}, {"generators", tds.acting_maps()}};
}

json hitting_instance(std::mt19937_64& rng) {
  // Systems where N fills the whole window say little; a few redraws make
  // them the minority. The last draw is kept either way.
  const Interval window{0, 40};
  json inst;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto tds = random_commuting_tds(rng, 10, 3);
    std::vector<std::size_t> U;
    const auto size = static_cast<std::size_t>(
        uniform(rng, 1, std::max<Int>(1, static_cast<Int>(tds.states()) / 3)));
    for (Int x : random_subset(rng, 0, static_cast<Int>(tds.states()) - 1, size))
      U.push_back(static_cast<std::size_t>(x));
    std::vector<TimeElement> T_list(static_cast<std::size_t>(uniform(rng, 1, 3)));
    for (auto& T : T_list) {
      T.assign(tds.generator_count(), 0);
      while (std::all_of(T.begin(), T.end(), [](Int c) { return c == 0; }))
        for (auto& c : T) c = uniform(rng, 0, 3);
    }
    inst = tds_json(tds);
    inst["suite"] = "hitting";
    inst["U"] = U;
    inst["T"] = T_list;
    inst["window"] = {window.lo, window.hi};
    if (static_cast<Int>(naive_hitting(tds, U, T_list, window).size()) < window.size()) break;
  }
  return inst;
}

json grunwald_instance(std::mt19937_64& rng) {
  const int q = static_cast<int>(uniform(rng, 1, 3));
  auto F = random_subset(rng, 0, 4, static_cast<std::size_t>(uniform(rng, 2, 3)));
  // q^n summed to n_max stays within the default oracle budget.
  const Int n_max = q == 1 ? 8 : q == 2 ? 18 : 11;
  return {{"suite", "grunwald"}, {"q", q}, {"F", F}, {"n_max", n_max}};
}

json make_instance(std::mt19937_64& rng, Suite suite) {
  switch (suite) {
    case Suite::mono:
    case Suite::diffset: return coloring_instance(rng, suite);
    case Suite::hitting: return hitting_instance(rng);
    case Suite::grunwald: return grunwald_instance(rng);
  }
  return {};
}

json mono_json(const std::optional<NaiveMono>& m) {
  if (!m) return nullptr;
  return {{"color", m->color}, {"a", m->a}, {"d", m->d}};
}

std::vector<Int> range(const json& pair) {
  std::vector<Int> out;
  for (Int v = pair.at(0).get<Int>(); v <= pair.at(1).get<Int>(); ++v) out.push_back(v);
  return out;
}

}  // namespace

DiffReport replay(const std::string& instance, const Engines& engines) {
  json inst;
  try {
    inst = json::parse(instance);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("instance is not valid JSON: ") + e.what());
  }
  DiffReport r;
  r.instance = inst.dump();
  try {
    const Suite suite = parse_suite(inst.at("suite").get<std::string>());
    r.operation = to_string(suite);
    json opt, naive;
    switch (suite) {
      case Suite::mono:
      case Suite::diffset: {
        const Interval w{inst.at("window").at(0).get<Int>(), inst.at("window").at(1).get<Int>()};
        const auto colors = inst.at("colors").get<std::vector<int>>();
        const auto F = inst.at("F").get<std::vector<Int>>();
        const auto d = range(inst.at("d"));
        const NatColoring c(NatRange(w), inst.at("q").get<int>(), colors);
        const ConfigSet<Int> Fs(F);
        if (suite == Suite::mono) {
          opt = mono_json(engines.mono(c, Fs, d));
          naive = mono_json(naive_mono(colors, w.lo, F, d));
        } else {
          const int j = inst.at("j").get<int>();
          opt = engines.diffset(c, Fs, j, d);
          naive = naive_diffset(colors, w.lo, F, j, d);
        }
        break;
      }
      case Suite::hitting: {
        const auto tds = FiniteTDS::nat(inst.at("states").get<std::size_t>(),
                                        inst.at("generators").get<std::vector<Map>>());
        const auto U = inst.at("U").get<std::vector<std::size_t>>();
        const auto T = inst.at("T").get<std::vector<TimeElement>>();
        const Interval w{inst.at("window").at(0).get<Int>(), inst.at("window").at(1).get<Int>()};
        opt = engines.hitting(tds, U, T, w);
        naive = naive_hitting(tds, U, T, w);
        break;
      }
      case Suite::grunwald: {
        const int q = inst.at("q").get<int>();
        const auto F = inst.at("F").get<std::vector<Int>>();
        const Int n_max = inst.at("n_max").get<Int>();
        const auto N = engines.grunwald(q, ConfigSet<Int>(F), n_max);
        opt = N ? json(*N) : json(nullptr);
        const auto nv = naive_grunwald(q, F, n_max);
        naive = nv ? json(*nv) : json(nullptr);
        break;
      }
    }
    r.optimized = opt.dump();
    r.naive = naive.dump();
    r.agree = opt == naive;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("instance is missing fields: ") + e.what());
  }
  return r;
}

std::vector<DiffReport> cross_check(Suite suite, std::uint64_t seed, const CrossCheckOptions& opts) {
  std::mt19937_64 rng(seed);
  const std::size_t count = opts.instances ? opts.instances : default_instances(suite);
  std::vector<DiffReport> reports;
  reports.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto r = replay(make_instance(rng, suite).dump(), opts.engines);
    if (!r.agree && opts.throw_on_disagreement) {
      throw Disagreement(std::string(to_string(suite)) + " instance " + std::to_string(i) +
                             ": optimized " + r.optimized + ", naive " + r.naive,
                         r.instance);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

FiniteTDS random_commuting_tds(std::mt19937_64& rng, std::size_t max_states,
                               std::size_t max_generators) {
  if (max_states == 0 || max_generators == 0) throw MalformedInput("empty generator request");
  const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_generators)));
  std::vector<Map> gens;
  if (max_states >= 4 && std::bernoulli_distribution(0.5)(rng)) {
    const auto a = static_cast<std::size_t>(uniform(rng, 2, static_cast<Int>(max_states / 2)));
    const auto b = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_states / a)));
    const Map f = random_map(rng, a), g = random_map(rng, b);
    const Map ida = identity_map(a), idb = identity_map(b);
    const std::vector<Map> pool = {product_map(f, idb), product_map(ida, g), product_map(f, g),
                                   product_map(compose(f, f), g)};
    for (std::size_t i = 0; i < k; ++i) gens.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, 3))]);
    return FiniteTDS::nat(a * b, std::move(gens));
  }
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_states)));
  const Map f = random_map(rng, n);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(map_power(f, static_cast<std::uint64_t>(uniform(rng, 1, 3))));
  return FiniteTDS::nat(n, std::move(gens));
}

}  // namespace semiramsey
