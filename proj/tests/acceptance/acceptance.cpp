// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semiramsey/algebra.hpp"
#include "semiramsey/dynamics.hpp"
#include "semiramsey/ellis.hpp"
#include "semiramsey/equidist.hpp"
#include "semiramsey/grunwald.hpp"
#include "semiramsey/oracle.hpp"
#include "semiramsey/symbolic.hpp"

using namespace semiramsey;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& run) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = seconds_since(start);
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %-34s %8.3fs  %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s,
              o.detail.c_str());
  std::fflush(stdout);
}

// Milliseconds for one call, keeping the result.
template <class F>
auto timed(double& ms, F&& f) {
  const auto start = Clock::now();
  auto r = f();
  ms = seconds_since(start) * 1e3;
  return r;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(const std::vector<std::size_t>& Y) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << Y.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < Y.size(); ++i)
      if (mask >> i & 1) s.push_back(Y[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome small_grunwald() {
  double ms2 = 0, ms1 = 0;
  const auto r2 = timed(ms2, [] { return grunwald_number(2, ConfigSet<Int>({0, 1})); });
  const auto r1 = timed(ms1, [] { return grunwald_number(1, ConfigSet<Int>({0, 1})); });
  const auto n2 = naive_grunwald(2, {0, 1}, 6);
  const auto n1 = naive_grunwald(1, {0, 1}, 6);
  const bool ok = r2.N == 3 && r1.N == 2 && n2 == 3 && n1 == 2 && ms2 < 10 && ms1 < 10;
  char buf[128];
  std::snprintf(buf, sizeof buf, "N(2,{0,1})=%lld in %.2f ms, N(1,{0,1})=%lld in %.2f ms",
                static_cast<long long>(r2.N), ms2, static_cast<long long>(r1.N), ms1);
  return {ok, buf};
}

Outcome grunwald_three_term() {
  double ms = 0;
  const ConfigSet<Int> F({0, 1, 2});
  const auto r = timed(ms, [&] { return grunwald_number(2, F); });
  const bool cert = r.extremal.colors().size() == 8 && verify_grunwald_extremal(r, F);
  const bool ok = r.N == 9 && cert && ms < 1000;
  return {ok, "N=" + std::to_string(r.N) + " extremal " + to_digits(r.extremal.colors()) +
                  (cert ? " verified" : " NOT verified") + ", " + std::to_string(ms) + " ms"};
}

Outcome grunwald_three_colors() {
  GrunwaldOptions opts;
  opts.threads = 8;
  const ConfigSet<Int> F({0, 1, 2});
  const auto start = Clock::now();
  const auto r = grunwald_number(3, F, opts);
  const double s = seconds_since(start);
  // Monotone in q and in F.
  const auto q2 = grunwald_number(2, F).N;
  const auto smaller_F = grunwald_number(3, ConfigSet<Int>({0, 1})).N;
  const bool ok = r.N == 27 && verify_grunwald_extremal(r, F) && q2 <= r.N && smaller_F <= r.N &&
                  s < 300;
  return {ok, "N=" + std::to_string(r.N) + ", " + std::to_string(r.exhaustion.nodes) +
                  " nodes, " + std::to_string(r.exhaustion.threads) + " threads"};
}

Outcome hitting_suite() {
  std::mt19937_64 rng(20240601);
  std::size_t instances = 0, checks = 0, bad = 0;
  std::string first_bad;
  while (instances < 200) {
    const auto tds = random_commuting_tds(rng, 12, 3);
    const auto ms = minimal_sets(tds);
    const auto& Y = ms.minimal_sets[std::uniform_int_distribution<std::size_t>(
        0, ms.minimal_sets.size() - 1)(rng)];
    const auto sub = subsystem(tds, Y);
    std::vector<std::size_t> local(Y.size());
    for (std::size_t i = 0; i < Y.size(); ++i) local[i] = i;
    std::vector<TimeElement> T_list(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    for (auto& T : T_list) {
      T.assign(sub.generator_count(), 0);
      for (auto& c : T) c = std::uniform_int_distribution<Int>(0, 3)(rng);
    }
    ++instances;
    for (const auto& U : nonempty_subsets(local)) {
      ++checks;
      const auto h = hitting_time_set(sub, U, T_list, Interval{0, 48});
      const bool ok = !h.not_minimal && !h.N.empty() && h.certificate.verified &&
                      h.period > 0 && verify_hitting_witnesses(sub, h);
      if (!ok && bad++ == 0) first_bad = "instance " + std::to_string(instances);
    }
  }
  return {bad == 0, std::to_string(instances) + " systems, " + std::to_string(checks) +
                        " sets U, " + std::to_string(bad) + " failures " + first_bad};
}

Outcome product_minimality_suite() {
  std::mt19937_64 rng(777);
  std::size_t done = 0, passed = 0;
  while (done < 50) {
    const auto tds = random_commuting_tds(rng, 8, 3);
    const std::size_t n = 1 + done % 3;
    std::vector<TimeElement> T_list(n);
    for (auto& T : T_list) {
      T.assign(tds.generator_count(), 0);
      for (auto& c : T) c = std::uniform_int_distribution<Int>(0, 2)(rng);
    }
    // Minimal base: restrict to a minimal set of <T_1..T_n>.
    std::vector<Map> A;
    for (const auto& T : T_list) A.push_back(tds.phi(T));
    const auto span = FiniteTDS::nat(tds.states(), A);
    const auto base = subsystem(span, minimal_sets(span).minimal_sets.front());
    const auto& restricted = base.acting_maps();
    // T_i is now the i-th generator of the base.
    for (std::size_t i = 0; i < n; ++i) T_list[i] = base.generator(i);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= base.states();
    // Lambda: a minimal set of the diagonal action on X^n.
    std::vector<Map> diagonal;
    for (const auto& g : restricted) {
      Map d(total);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code, out = 0, scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
          out += g[c % base.states()] * scale;
          c /= base.states();
          scale *= base.states();
        }
        d[code] = static_cast<std::uint32_t>(out);
      }
      diagonal.push_back(std::move(d));
    }
    const auto lambda_codes =
        minimal_sets(FiniteTDS::nat(total, diagonal)).minimal_sets.front();
    std::vector<Tuple> lambda;
    for (auto code : lambda_codes) {
      Tuple t(n);
      for (std::size_t i = 0; i < n; ++i) {
        t[i] = code % base.states();
        code /= base.states();
      }
      lambda.push_back(std::move(t));
    }
    const auto r = verify_product_minimality(base, T_list, lambda);
    ++done;
    if (r.passed) ++passed;
  }
  return {passed == done, std::to_string(passed) + "/" + std::to_string(done) + " minimal"};
}

Outcome skew_product_suite() {
  std::mt19937_64 rng(31);
  std::size_t built = 0, points = 0, bad = 0;
  while (built < 30) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    Map f(n);
    for (auto& v : f) v = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
    const auto group_pick = std::uniform_int_distribution<int>(1, 5)(rng);
    const FiniteGroup K = group_pick == 5 ? FiniteGroup::klein4()
                                          : FiniteGroup::cyclic(static_cast<std::size_t>(group_pick));
    // Generators f^e_i with cocycles induced from one cocycle of f, so the
    // lifts commute.
    std::vector<std::size_t> psi_f(n);
    for (auto& v : psi_f) v = std::uniform_int_distribution<std::size_t>(0, K.size() - 1)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Map> gens;
    std::vector<std::vector<std::size_t>> psi;
    for (std::size_t i = 0; i < k; ++i) {
      const auto e = std::uniform_int_distribution<std::uint64_t>(1, 3)(rng);
      gens.push_back(map_power(f, e));
      std::vector<std::size_t> p(n);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t acc = K.identity(), y = x;
        for (std::uint64_t s = 0; s < e; ++s) {
          acc = K.op(psi_f[y], acc);
          y = f[y];
        }
        p[x] = acc;
      }
      psi.push_back(std::move(p));
    }
    const auto base = FiniteTDS::nat(n, gens);
    const auto skew = build_skew_product(base, K, psi);
    ++built;
    const auto ms = minimal_sets(base);
    for (std::size_t x0 = 0; x0 < n; ++x0) {
      if (!ms.membership[x0]) continue;
      const auto lift = verify_uniform_recurrence_lift(skew, x0);
      points += K.size();
      if (!lift.all_recurrent || !lift.rotations_commute || !lift.projections_minimal) ++bad;
    }
  }
  return {bad == 0, std::to_string(built) + " skew products, " + std::to_string(points) +
                        " fiber points, " + std::to_string(bad) + " failures"};
}

Outcome vdw_multiples() {
  const Interval window{0, 500};
  std::size_t entries = 0, bad = 0;
  for (Int m : {2, 3, 5}) {
    std::vector<Int> S;
    for (Int x = 0; x <= 500; x += m) S.push_back(x);
    // Every F inside {0..5} with 1 to 4 elements.
    for (std::uint32_t mask = 1; mask < 64; ++mask) {
      const int size = __builtin_popcount(mask);
      if (size > 4) continue;
      std::vector<Int> F;
      for (Int f = 0; f < 6; ++f)
        if (mask >> f & 1) F.push_back(f);
      const Int span = F.back() - F.front();
      // d up to the point where every residue of a mod m still fits, so the
      // window's right edge does not remove any d.
      std::vector<Int> d_values;
      for (Int d = 1; d * F.back() <= 500 - (m - 1) && d <= 500; ++d) d_values.push_back(d);
      const std::vector<ConfigSet<Int>> Fs{ConfigSet<Int>(F)};
      const auto r = verify_vdw_set(S, window, Fs, d_values);
      const auto& e = r.entries.front();
      ++entries;
      const bool ok = r.syndetic_input && !e.D.empty() && e.certificate.verified &&
                      static_cast<Int>(e.certificate.K.size()) <= m * span + 1;
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(entries) + " (m, F) pairs, " + std::to_string(bad) + " failures"};
}

Outcome weak_central_periodic() {
  const Int length = 72;
  std::size_t words = 0, bad = 0;
  for (int p = 1; p <= 6; ++p) {
    for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
      std::vector<int> colors(static_cast<std::size_t>(length));
      for (Int i = 0; i < length; ++i) colors[static_cast<std::size_t>(i)] = 1 + (bits >> (i % p) & 1);
      const NatColoring c(NatRange(0, length - 1), 2, colors);
      const auto r = furstenberg_subshift(c, 6, true);
      std::vector<Int> Bj;
      for (Int i = 0; i < length; ++i)
        if (colors[static_cast<std::size_t>(i)] == r.certificate.color) Bj.push_back(i);
      ++words;
      if (!(verify_weak_central(c, r) && r.certificate.S == Bj && r.certificate.exact)) ++bad;
    }
  }
  return {bad == 0, std::to_string(words) + " periodic words, " + std::to_string(bad) + " failures"};
}

Outcome equidistribution() {
  const auto f = parse_test_function("cos");
  const auto linear = poly_equidistribution({0.0, std::sqrt(2.0)}, f, 1e6);
  const auto quadratic = poly_equidistribution({0.0, 1.0, std::sqrt(2.0)}, f, 1e6);
  char buf[128];
  std::snprintf(buf, sizeof buf, "sqrt2 x: %.2e, sqrt2 x^2 + x: %.2e", linear.time_average,
                quadratic.time_average);
  return {std::abs(linear.time_average) <= 0.01 && std::abs(quadratic.time_average) <= 0.01, buf};
}

Outcome oracle_equivalence() {
  std::string detail;
  bool ok = true;
  for (Suite s : {Suite::mono, Suite::diffset, Suite::hitting, Suite::grunwald}) {
    CrossCheckOptions opts;
    opts.throw_on_disagreement = false;
    const auto reports = cross_check(s, 1, opts);
    std::size_t agree = 0;
    for (const auto& r : reports) agree += r.agree;
    ok = ok && agree == reports.size();
    detail += std::string(to_string(s)) + " " + std::to_string(agree) + "/" +
              std::to_string(reports.size()) + " ";
  }
  return {ok, detail};
}

// Single-entry mutations: each one must produce a violation whose witness
// reproduces against the mutated tables.
Outcome validator_mutations() {
  std::size_t mutations = 0, detected = 0;
  auto check_ring = [&](const Table& add, const Table& mul, std::size_t zero, std::size_t unit) {
    ++mutations;
    try {
      const FiniteSemiring r(add, mul, zero, unit);
      const auto rep = validate_structure(r);
      bool witnessed = !rep.valid && !rep.violations.empty();
      for (const auto& v : rep.violations) witnessed = witnessed && reproduces(r, v);
      if (witnessed) ++detected;
    } catch (const MalformedTable&) {
    }
  };
  const auto boolean = FiniteSemiring::boolean();
  const std::pair<char, std::pair<int, int>> bool_cells[] = {
      {'+', {0, 0}}, {'+', {0, 1}}, {'+', {1, 0}}, {'*', {0, 0}},
      {'*', {0, 1}}, {'*', {1, 0}}, {'*', {1, 1}}};
  for (const auto& [table, cell] : bool_cells) {
    Table add = boolean.add_table(), mul = boolean.mul_table();
    auto& t = table == '+' ? add : mul;
    auto& v = t[static_cast<std::size_t>(cell.first)][static_cast<std::size_t>(cell.second)];
    v = 1 - v;
    check_ring(add, mul, boolean.zero(), boolean.unit());
  }
  const auto z4 = FiniteSemiring::integers_mod(4);
  for (char table : {'+', '*'}) {
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = x + 1; y < 4; ++y) {
        Table add = z4.add_table(), mul = z4.mul_table();
        auto& t = table == '+' ? add : mul;
        t[x][y] = (t[x][y] + 1) % 4;
        check_ring(add, mul, z4.zero(), z4.unit());
      }
    }
  }
  {
    Table add = z4.add_table(), mul = z4.mul_table();
    mul[3][3] = (mul[3][3] + 1) % 4;
    check_ring(add, mul, z4.zero(), z4.unit());
  }
  return {mutations == 20 && detected == mutations,
          std::to_string(detected) + "/" + std::to_string(mutations) + " mutations detected"};
}

}  // namespace

int main() {
  report(1, "grunwald small", small_grunwald);
  report(2, "grunwald q=2 F={0,1,2}", grunwald_three_term);
  report(3, "grunwald q=3 F={0,1,2}", grunwald_three_colors);
  report(4, "syndetic hitting sets", hitting_suite);
  report(5, "product system minimality", product_minimality_suite);
  report(6, "group extension recurrence", skew_product_suite);
  report(7, "syndetic sets are vdW-sets", vdw_multiples);
  report(8, "weak central periodic colorings", weak_central_periodic);
  report(9, "polynomial equidistribution", equidistribution);
  report(10, "oracle equivalence", oracle_equivalence);
  report(11, "validator mutation detection", validator_mutations);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
