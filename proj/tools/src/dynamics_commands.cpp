#include <cmath>
#include <sstream>

#include "commands.hpp"
#include "semiramsey/equidist.hpp"
#include "semiramsey/symbolic.hpp"

namespace cli {

using namespace semiramsey;

namespace {

SkewProduct skew_from(const json& j) {
  const auto base = tds_from(j);
  if (!j.contains("group")) throw MalformedInput("skew product needs 'group'");
  const auto group = group_from(j.at("group"));
  if (j.contains("cocycle")) {
    return build_skew_product(base, group,
                              j.at("cocycle").get<std::vector<std::vector<std::size_t>>>());
  }
  if (j.contains("cocycle_times")) {
    return build_skew_product_from_times(
        base, group, j.at("cocycle_times").get<std::vector<std::vector<std::size_t>>>());
  }
  throw MalformedInput("skew product needs 'cocycle' or 'cocycle_times'");
}

json minimal_json(const MinimalSetReport& r) {
  json membership = json::array();
  for (const auto& m : r.membership) membership.push_back(m ? json(*m) : json(nullptr));
  return {{"minimal_sets", r.minimal_sets}, {"membership", membership}};
}

// Comma list of reals; a token may be "sqrt2" or "c*sqrt2".
std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    double factor = 1.0;
    if (const auto star = token.find("*sqrt2"); star != std::string::npos) {
      factor = std::sqrt(2.0);
      token = token.substr(0, star);
    } else if (token == "sqrt2") {
      factor = std::sqrt(2.0);
      token = "1";
    }
    const auto v = parse_doubles(token);
    if (v.size() != 1) throw MalformedInput("bad coefficient '" + token + "'");
    out.push_back(v.front() * factor);
  }
  if (out.empty()) throw MalformedInput("no coefficients given");
  return out;
}

struct TdsArgs {
  std::string file;
  void add(CLI::App* sub) { sub->add_option("--tds", file, "System JSON file")->required(); }
  json raw() const { return read_json_file(file); }
  FiniteTDS load() const { return tds_from(raw()); }
};

}  // namespace

void add_dynamics_commands(CLI::App& app, Registry& reg) {
  {
    auto* sub = app.add_subcommand("tds-validate", "Check commutation and the action laws");
    auto args = std::make_shared<TdsArgs>();
    args->add(sub);
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto raw = args->raw();
        try {
          const auto tds = tds_from(raw);
          return finish({{"kind", "tds-validate"}, {"states", tds.states()},
                         {"generators", tds.generator_count()},
                         {"finite_time", tds.finite_time()}},
                        true);
        } catch (const NonCommuting& e) {
          return finish({{"kind", "tds-validate"},
                         {"violation", "NonCommuting"},
                         {"witness", {{"i", e.first()}, {"j", e.second()}, {"x", e.state()}}},
                         {"message", e.what()}},
                        false);
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("minimal", "Minimal sets of a finite system");
    auto args = std::make_shared<TdsArgs>();
    args->add(sub);
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto raw = args->raw();
        const auto tds = tds_from(raw);
        json out = minimal_json(minimal_sets(tds));
        out["kind"] = "minimal";
        out["tds"] = raw;
        return finish(std::move(out), true);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("recurrence", "Uniform recurrence of a state");
    auto args = std::make_shared<TdsArgs>();
    auto x = std::make_shared<std::size_t>(0);
    auto window = std::make_shared<std::string>();
    args->add(sub);
    sub->add_option("--x", *x, "State")->required();
    sub->add_option("--window", *window, "t window lo:hi for the return-time listing");
    sub->callback([&reg, args, x, window] {
      reg.action = [args, x, window]() {
        const auto tds = args->load();
        std::optional<Interval> w;
        if (!window->empty()) w = parse_range(*window);
        const auto r = uniform_recurrence(tds, *x, w);
        json out = {{"kind", "recurrence"}, {"x", r.x}, {"recurrent", r.recurrent},
                    {"K", time_json(r.K)}, {"K_verified", r.K_verified}};
        out["minimal_set"] = r.minimal_set ? json(*r.minimal_set) : json(nullptr);
        if (r.return_times) out["return_times"] = to_json(*r.return_times);
        return finish(std::move(out), r.recurrent);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("hitting", "Multiple hitting-time set of U with a gap certificate");
    struct Args {
      TdsArgs tds;
      std::string U, window;
      std::vector<std::string> T;
      bool restrict = false;
    };
    auto args = std::make_shared<Args>();
    args->tds.add(sub);
    sub->add_option("--U", args->U, "States of U")->required();
    sub->add_option("--T", args->T, "Time elements: 1, 2*1, 1+2 (repeat or comma-separate)")
        ->required();
    sub->add_option("--window", args->window, "t window lo:hi")->required();
    sub->add_flag("--restrict", args->restrict, "Restrict U to the first minimal set it meets");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto raw = args->tds.raw();
        const auto tds = tds_from(raw);
        const auto T = parse_time_list(args->T, tds);
        const auto h = hitting_time_set(tds, parse_indices(args->U), T, parse_range(args->window),
                                        HittingOptions{args->restrict});
        json out = to_json(h);
        out["kind"] = "hitting";
        out["tds"] = raw;
        if (h.not_minimal) {
          out["warning"] = "NotMinimal: U meets no minimal set";
          std::cerr << "warning: NotMinimal: U meets no minimal set\n";
        }
        return finish(std::move(out), h.certificate.verified && !h.N.empty());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("cover", "Hitting set for the first cover member meeting a minimal set");
    struct Args {
      TdsArgs tds;
      std::string cover, window;
      std::vector<std::string> T;
    };
    auto args = std::make_shared<Args>();
    args->tds.add(sub);
    sub->add_option("--cover", args->cover, "Cover members, e.g. 0,1,2;3,4,5")->required();
    sub->add_option("--T", args->T, "Time elements")->required();
    sub->add_option("--window", args->window, "t window lo:hi")->required();
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto raw = args->tds.raw();
        const auto tds = tds_from(raw);
        const auto r = cover_recurrence(tds, parse_groups(args->cover),
                                        parse_time_list(args->T, tds), parse_range(args->window));
        json out = {{"kind", "cover"}, {"chosen", r.chosen}, {"hitting", to_json(r.hitting)}};
        return finish(std::move(out), r.hitting.certificate.verified);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("skew", "Build a group extension X x K from a cocycle");
    auto file = std::make_shared<std::string>();
    sub->add_option("--skew", *file, "System JSON with 'group' and 'cocycle'")->required();
    sub->callback([&reg, file] {
      reg.action = [file]() {
        try {
          const auto s = skew_from(read_json_file(*file));
          return finish({{"kind", "skew"}, {"product", to_json(s.product)},
                         {"group_size", s.group.size()}},
                        true);
        } catch (const CocycleViolation& e) {
          return finish({{"kind", "skew"},
                         {"violation", "CocycleViolation"},
                         {"witness", {{"s", e.s()}, {"t", e.t()}, {"x", e.state()}}},
                         {"message", e.what()}},
                        false);
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lift-check", "Uniform recurrence of every fiber point over x0");
    auto file = std::make_shared<std::string>();
    auto x0 = std::make_shared<std::size_t>(0);
    sub->add_option("--skew", *file, "System JSON with 'group' and 'cocycle'")->required();
    sub->add_option("--x0", *x0, "Base state")->required();
    sub->callback([&reg, file, x0] {
      reg.action = [file, x0]() {
        const auto s = skew_from(read_json_file(*file));
        const auto r = verify_uniform_recurrence_lift(s, *x0);
        json fibers = json::array();
        for (bool b : r.fiber_recurrent) fibers.push_back(b);
        return finish({{"kind", "lift-check"}, {"x0", r.x0}, {"fiber_recurrent", fibers},
                       {"all_recurrent", r.all_recurrent},
                       {"rotations_commute", r.rotations_commute},
                       {"projections_minimal", r.projections_minimal}},
                      r.all_recurrent && r.rotations_commute && r.projections_minimal);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("subshift", "Pattern graph of a coloring and a weak central set");
    auto coloring = std::make_shared<ColoringArgs>();
    auto shape = std::make_shared<std::size_t>(3);
    auto periodic = std::make_shared<bool>(false);
    coloring->add(sub);
    sub->add_option("--shape", *shape, "Pattern length");
    sub->add_flag("--periodic", *periodic, "Assert the coloring is eventually periodic");
    sub->callback([&reg, coloring, shape, periodic] {
      reg.action = [coloring, shape, periodic]() {
        const auto c = coloring->load();
        const auto r = furstenberg_subshift(c, *shape, *periodic);
        json nodes = json::array();
        for (const auto& n : r.subshift.nodes) nodes.push_back(to_digits(n));
        const auto& cert = r.certificate;
        json out = {{"kind", "subshift"},
                    {"coloring", to_json(c)},
                    {"shape", *shape},
                    {"nodes", nodes},
                    {"transitions", r.subshift.transitions},
                    {"certificate",
                     {{"color", cert.color},
                      {"eta", to_digits(cert.eta)},
                      {"eta_position", cert.eta_position},
                      {"recurrent_class", cert.recurrent_class},
                      {"S", cert.S},
                      {"exact", cert.exact},
                      {"label", cert.label}}}};
        return finish(std::move(out), verify_weak_central(c, r));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("piecewise", "A stretch of length L where S has gaps <= k");
    struct Args {
      std::string S, window;
      Int k = 1, L = 1;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--S", args->S, "S as a comma list")->required();
    sub->add_option("--window", args->window, "Window lo:hi")->required();
    sub->add_option("--k", args->k, "Gap bound")->required();
    sub->add_option("--L", args->L, "Stretch length")->required();
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto S = parse_ints(args->S);
        const auto w = parse_range(args->window);
        const auto r = piecewise_syndetic_check(S, w, args->k, args->L);
        json out = {{"kind", "piecewise"}, {"S", S}, {"window", {w.lo, w.hi}}, {"k", args->k},
                    {"L", args->L}};
        out["witness"] = nullptr;
        if (r.witness) out["witness"] = {r.witness->lo, r.witness->hi};
        return finish(std::move(out), r.holds);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("equidist", "Time average of f(frac(p(x))) against the circle average");
    struct Args {
      std::string coeffs, f = "cos";
      double T = 1e4, step = max_quadrature_step;
      std::optional<double> tol;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--coeffs", args->coeffs, "a_0,a_1,..,a_d (sqrt2 allowed)")->required();
    sub->add_option("--f", args->f, "one, cos[:k], sin[:k], ind:a:b:w");
    sub->add_option("--T", args->T, "Horizon");
    sub->add_option("--step", args->step, "Quadrature step (at most 1e-2)");
    sub->add_option("--tol", args->tol, "Exit 2 when the discrepancy exceeds this");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto coeffs = parse_coefficients(args->coeffs);
        const auto r = poly_equidistribution(coeffs, parse_test_function(args->f), args->T,
                                             args->step);
        json out = {{"kind", "equidist"},        {"coeffs", coeffs},
                    {"f", args->f},              {"T", args->T},
                    {"time_average", r.time_average}, {"space_average", r.space_average},
                    {"discrepancy", r.discrepancy},   {"samples", r.samples},
                    {"step", r.step},            {"double_double", r.double_double}};
        return finish(std::move(out), !args->tol || r.discrepancy <= *args->tol);
      };
    });
  }
}

}  // namespace cli
