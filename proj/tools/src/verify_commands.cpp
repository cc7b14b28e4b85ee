#include <algorithm>
#include <cmath>
#include <set>

#include "commands.hpp"
#include "semiramsey/oracle.hpp"

namespace cli {

using namespace semiramsey;

// Every check here re-evaluates the claim from the raw data in the document:
// colors are read cell by cell, copies are rebuilt by realize_copy, maps are
// applied pointwise. No search engine is consulted.

namespace {

class Checks {
 public:
  void add(std::string name, bool ok) {
    all_ = all_ && ok;
    list_.push_back({{"check", std::move(name)}, {"ok", ok}});
  }
  bool all() const { return all_; }
  json list() const { return list_; }

 private:
  bool all_ = true;
  json list_ = json::array();
};

Interval window_of(const json& j) {
  const auto w = j.get<std::vector<Int>>();
  if (w.size() != 2) throw MalformedInput("window must be [lo, hi]");
  return Interval{w[0], w[1]};
}

std::vector<Int> d_range(const json& j) {
  const auto r = j.get<std::vector<Int>>();
  if (r.empty()) return {};
  if (r.size() != 2) throw MalformedInput("d must be [lo, hi]");
  return to_vector(Interval{r[0], r[1]});
}

// Colors of the copy a + dF, or nullopt when a cell leaves the window.
std::optional<std::vector<int>> copy_colors(const NatColoring& c, Int a, Int d,
                                            const std::vector<Int>& F) {
  const auto copy = realize_copy(NatModule{}, a, d, ConfigSet<Int>(F));
  std::vector<int> out;
  for (Int x : copy.realized) {
    if (!c.window().range.contains(x)) return std::nullopt;
    out.push_back(c.color_at(x));
  }
  return out;
}

bool all_equal_to(const std::optional<std::vector<int>>& colors, int j) {
  return colors && std::all_of(colors->begin(), colors->end(), [j](int x) { return x == j; });
}

// Every t in the checked range has some k in K with t + k in D.
bool gap_holds(const SyndeticCertificate& c) {
  if (c.K.empty()) return false;
  const std::set<Int> D(c.D.begin(), c.D.end());
  const Int kmin = *std::min_element(c.K.begin(), c.K.end());
  const Int kmax = *std::max_element(c.K.begin(), c.K.end());
  for (Int t = std::max<Int>(0, c.window.lo - kmin); t <= c.window.hi - kmax; ++t) {
    const bool hit = std::any_of(c.K.begin(), c.K.end(), [&](Int k) {
      return D.count(t + k) && c.window.contains(t + k);
    });
    if (!hit) return false;
  }
  return true;
}

void verify_syndetic(const json& cert, Checks& checks) {
  const auto c = syndetic_from(cert.at("certificate"));
  bool ok = false;
  if (cert.contains("ring")) {
    const auto ring = semiring_from(cert.at("ring"));
    const std::set<Int> D(c.D.begin(), c.D.end());
    ok = !c.K.empty();
    for (std::size_t t = 0; ok && t < ring.size(); ++t) {
      ok = std::any_of(c.K.begin(), c.K.end(), [&](Int k) {
        return D.count(static_cast<Int>(ring.add(static_cast<std::size_t>(k), t))) > 0;
      });
    }
  } else {
    ok = gap_holds(c);
  }
  checks.add("every translate of K meets D", ok == c.verified);
}

void verify_copies(const json& cert, Checks& checks) {
  const auto F = cert.at("F").get<std::vector<Int>>();
  auto one = [&](const json& c) {
    const auto copy = realize_copy(NatModule{}, c.at("a").get<Int>(), c.at("d").get<Int>(),
                                   ConfigSet<Int>(F));
    return copy.realized == c.at("realized").get<std::vector<Int>>();
  };
  if (cert.at("kind") == "copy") {
    checks.add("realized = a + dF", one(cert.at("copy")));
    return;
  }
  const auto w = window_of(cert.at("window"));
  bool ok = true;
  for (const auto& c : cert.at("copies")) {
    ok = ok && one(c);
    for (Int x : c.at("realized").get<std::vector<Int>>()) ok = ok && w.contains(x);
  }
  checks.add("every listed copy is realized inside the window", ok);
  checks.add("count matches the list", cert.at("count").get<std::size_t>() == cert.at("copies").size());
}

void verify_mono(const json& cert, Checks& checks) {
  const auto c = coloring_from(cert.at("coloring"));
  const auto F = cert.at("F").get<std::vector<Int>>();
  const auto ds = d_range(cert.at("d"));
  const bool zero = cert.value("allow_zero_d", false);
  const auto& w = cert.at("witness");
  if (!w.is_null()) {
    const Int d = w.at("d").get<Int>();
    checks.add("d is admissible", zero || d >= 1);
    checks.add("every cell has the witness color",
               all_equal_to(copy_colors(c, w.at("a").get<Int>(), d, F), w.at("color").get<int>()));
    return;
  }
  const auto none = naive_mono(c.colors(), c.window().range.lo, F, ds, zero);
  checks.add("no monochromatic copy for any listed d", !none.has_value());
}

void verify_diffset(const json& cert, Checks& checks) {
  const auto c = coloring_from(cert.at("coloring"));
  const auto F = cert.at("F").get<std::vector<Int>>();
  const int j = cert.at("j").get<int>();
  bool ok = true;
  for (const auto& e : cert.at("witnesses")) {
    ok = ok && !e.at("a").is_null() &&
         all_equal_to(copy_colors(c, e.at("a").get<Int>(), e.at("d").get<Int>(), F), j);
  }
  checks.add("each d in D has a copy in color j", ok);
  const auto D = naive_diffset(c.colors(), c.window().range.lo, F, j, d_range(cert.at("d")),
                               cert.value("allow_zero_d", false));
  checks.add("D is exactly the set of such d", D == cert.at("D").get<std::vector<Int>>());
}

void verify_grunwald(const json& cert, Checks& checks) {
  if (cert.contains("F_points")) {
    throw MalformedInput("verify covers Grünwald certificates over Z_+ only");
  }
  const auto c = coloring_from(cert.at("extremal"));
  const auto F = cert.at("F").get<std::vector<Int>>();
  const Int N = cert.at("N").get<Int>();
  checks.add("extremal coloring has N - 1 cells", c.window().range.size() == N - 1);
  const auto ds = to_vector(Interval{1, std::max<Int>(1, N - 1)});
  checks.add("extremal coloring has no monochromatic copy",
             !naive_mono(c.colors(), c.window().range.lo, F, ds).has_value());
}

void verify_vdwset(const json& cert, Checks& checks) {
  const auto S = cert.at("S").get<std::vector<Int>>();
  const std::set<Int> in_s(S.begin(), S.end());
  const auto w = window_of(cert.at("window"));
  if (cert.contains("input_certificate")) {
    const auto ic = syndetic_from(cert.at("input_certificate"));
    checks.add("input certificate for S", gap_holds(ic) == ic.verified);
  }
  for (const auto& e : cert.at("entries")) {
    const auto F = e.at("F").get<std::vector<Int>>();
    bool ok = true;
    for (Int d : e.at("D").get<std::vector<Int>>()) {
      bool found = false;
      for (Int a = w.lo; a <= w.hi && !found; ++a) {
        const auto copy = realize_copy(NatModule{}, a, d, ConfigSet<Int>(F));
        found = std::all_of(copy.realized.begin(), copy.realized.end(),
                            [&](Int x) { return w.contains(x) && in_s.count(x); });
      }
      ok = ok && found;
    }
    checks.add("each d in D_F has a copy inside S", ok);
    const auto dc = syndetic_from(e.at("certificate"));
    checks.add("gap certificate for D_F", gap_holds(dc) == dc.verified);
  }
}

void verify_schur_brauer(const json& cert, Checks& checks) {
  const auto c = coloring_from(cert.at("coloring"));
  const auto F = cert.at("F").get<std::vector<Int>>();
  const auto range = c.window().range;
  auto holds_at = [&](int j, Int a, Int b) {
    if (b == 0 || !range.contains(b) || c.color_at(b) != j) return false;
    for (Int f : F) {
      const Int x = a + f * b;
      if (!range.contains(x) || c.color_at(x) != j) return false;
    }
    return true;
  };
  const auto& w = cert.at("witness");
  if (!w.is_null()) {
    checks.add("b and a + Fb share color j",
               holds_at(w.at("j").get<int>(), w.at("a").get<Int>(), w.at("b").get<Int>()));
    return;
  }
  bool none = true;
  for (Int b = range.lo; b <= range.hi && none; ++b) {
    for (Int a = range.lo; a <= range.hi && none; ++a) {
      if (b != 0 && holds_at(c.color_at(b), a, b)) none = false;
    }
  }
  checks.add("no (j, a, b) in the window", none);
}

void verify_diameter(const json& cert, Checks& checks) {
  const auto& hit = cert.at("hit");
  if (hit.is_null()) throw MalformedInput("a diameter certificate without a hit carries no values");
  const auto F = cert.at("F").get<std::vector<Int>>();
  const auto copy = realize_copy(NatModule{}, hit.at("a").get<Int>(), hit.at("d").get<Int>(),
                                 ConfigSet<Int>(F));
  std::vector<std::vector<double>> values;
  bool cells_ok = hit.at("cells").size() == copy.realized.size();
  for (std::size_t i = 0; cells_ok && i < copy.realized.size(); ++i) {
    const auto& cell = hit.at("cells")[i];
    cells_ok = cell.at("x").get<Int>() == copy.realized[i];
    values.push_back(cell.at("value").get<std::vector<double>>());
  }
  checks.add("cells are a + dF", cells_ok);
  double diam = 0.0;
  for (const auto& u : values) {
    for (const auto& v : values) {
      for (std::size_t k = 0; k < std::min(u.size(), v.size()); ++k)
        diam = std::max(diam, std::abs(u[k] - v[k]));
    }
  }
  checks.add("diameter below eps", diam < cert.at("eps").get<double>());
}

void verify_hitting(const json& cert, Checks& checks) {
  const auto tds = tds_from(cert.at("tds"));
  const auto U = cert.at("U").get<std::vector<std::size_t>>();
  const std::set<std::size_t> in_u(U.begin(), U.end());
  std::vector<TimeElement> T;
  for (const auto& t : cert.at("T")) T.push_back(t.get<TimeElement>());
  const auto N = cert.at("N").get<std::vector<Int>>();
  const auto wit = cert.at("witnesses").get<std::vector<std::size_t>>();
  bool ok = N.size() == wit.size();
  for (std::size_t i = 0; ok && i < N.size(); ++i) {
    for (const auto& Ti : T) ok = ok && in_u.count(tds.phi(Ti, N[i])[wit[i]]) > 0;
    ok = ok && in_u.count(wit[i]) > 0;
  }
  checks.add("each t in N has a witness state", ok);
  const auto naive = naive_hitting(tds, U, T, window_of(cert.at("window")));
  checks.add("N is exactly the hitting set on the window", naive == N);
  const auto gc = syndetic_from(cert.at("certificate"));
  if (!tds.finite_time()) checks.add("gap certificate for N", gap_holds(gc) == gc.verified);
}

// States reachable from x under the acting maps.
std::set<std::size_t> reach(const FiniteTDS& tds, std::size_t x) {
  std::set<std::size_t> seen{x};
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    const auto y = stack.back();
    stack.pop_back();
    for (const auto& m : tds.acting_maps()) {
      if (seen.insert(m[y]).second) stack.push_back(m[y]);
    }
  }
  return seen;
}

void verify_minimal(const json& cert, Checks& checks) {
  const auto tds = tds_from(cert.at("tds"));
  const auto sets = cert.at("minimal_sets").get<std::vector<std::vector<std::size_t>>>();
  bool ok = true;
  std::set<std::size_t> covered;
  for (const auto& Y : sets) {
    const std::set<std::size_t> y(Y.begin(), Y.end());
    for (auto x : Y) ok = ok && reach(tds, x) == y;
    covered.insert(Y.begin(), Y.end());
  }
  checks.add("each listed set is closed and every point reaches every other", ok);
  // A state whose reach set contains no listed set would contradict completeness.
  bool complete = true;
  for (std::size_t x = 0; x < tds.states(); ++x) {
    const auto r = reach(tds, x);
    complete = complete && std::any_of(r.begin(), r.end(), [&](auto y) { return covered.count(y); });
  }
  checks.add("every orbit closure contains a listed minimal set", complete);
}

void verify_subshift(const json& cert, Checks& checks) {
  const auto c = coloring_from(cert.at("coloring"));
  const auto& wc = cert.at("certificate");
  const int j = wc.at("color").get<int>();
  const auto range = c.window().range;
  std::vector<Int> S;
  for (Int x = range.lo; x <= range.hi; ++x)
    if (c.color_at(x) == j) S.push_back(x);
  checks.add("S is the color class of j", S == wc.at("S").get<std::vector<Int>>());
  const auto eta = wc.at("eta").get<std::string>();
  const Int p = wc.at("eta_position").get<Int>();
  bool occurs = !eta.empty() && eta.front() - '0' == j;
  for (std::size_t i = 0; occurs && i < eta.size(); ++i) {
    const Int x = p + static_cast<Int>(i);
    occurs = range.contains(x) && c.color_at(x) == eta[i] - '0';
  }
  checks.add("eta occurs at its position and starts with j", occurs);
}

void verify_piecewise(const json& cert, Checks& checks) {
  const auto S = cert.at("S").get<std::vector<Int>>();
  const std::set<Int> in_s(S.begin(), S.end());
  const auto w = window_of(cert.at("window"));
  const Int k = cert.at("k").get<Int>();
  const Int L = cert.at("L").get<Int>();
  auto block_hits = [&](Int t) {
    for (Int x = t; x < t + k; ++x)
      if (in_s.count(x)) return true;
    return false;
  };
  if (!cert.at("witness").is_null()) {
    const auto iv = window_of(cert.at("witness"));
    bool ok = iv.lo >= w.lo && iv.hi <= w.hi && iv.size() >= L;
    for (Int t = iv.lo; ok && t + k - 1 <= iv.hi; ++t) ok = block_hits(t);
    checks.add("every k-block in the witness meets S", ok);
    return;
  }
  Int best = 0, run = 0;
  for (Int t = w.lo; t + k - 1 <= w.hi; ++t) {
    run = block_hits(t) ? run + 1 : 0;
    if (run > 0) best = std::max(best, run + k - 1);
  }
  checks.add("no stretch of length L", best < L);
}

}  // namespace

json verify_certificate(const json& cert) {
  if (!cert.is_object() || !cert.contains("kind")) {
    throw MalformedInput("certificate needs a 'kind'");
  }
  const auto kind = cert.at("kind").get<std::string>();
  Checks checks;
  try {
    if (kind == "syndetic") {
      verify_syndetic(cert, checks);
    } else if (kind == "copy" || kind == "copies") {
      verify_copies(cert, checks);
    } else if (kind == "mono") {
      verify_mono(cert, checks);
    } else if (kind == "diffset") {
      verify_diffset(cert, checks);
    } else if (kind == "grunwald") {
      verify_grunwald(cert, checks);
    } else if (kind == "vdwset") {
      verify_vdwset(cert, checks);
    } else if (kind == "schur-brauer") {
      verify_schur_brauer(cert, checks);
    } else if (kind == "diameter") {
      verify_diameter(cert, checks);
    } else if (kind == "hitting") {
      verify_hitting(cert, checks);
    } else if (kind == "minimal") {
      verify_minimal(cert, checks);
    } else if (kind == "subshift") {
      verify_subshift(cert, checks);
    } else if (kind == "piecewise") {
      verify_piecewise(cert, checks);
    } else {
      throw MalformedInput("no verifier for certificate kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("certificate field: ") + e.what());
  }
  return {{"kind", "verify"}, {"certificate_kind", kind}, {"checks", checks.list()},
          {"verified", checks.all()}};
}

void add_verify_command(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("verify", "Re-check an emitted certificate by direct evaluation");
  auto file = std::make_shared<std::string>();
  sub->add_option("--cert", *file, "Certificate JSON file")->required();
  sub->callback([&reg, file] {
    reg.action = [file]() {
      auto out = verify_certificate(read_json_file(*file));
      const bool ok = out.at("verified").get<bool>();
      return finish(std::move(out), ok);
    };
  });
}

}  // namespace cli
