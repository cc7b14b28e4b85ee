#include <cmath>

#include "commands.hpp"
#include "semiramsey/grunwald.hpp"

namespace cli {

using namespace semiramsey;

void ColoringArgs::add(CLI::App* sub) {
  sub->add_option("--coloring", file, "Coloring JSON file");
  sub->add_option("--colors", colors, "Digit string, e.g. 11221122");
  sub->add_option("--window", window, "Window lo:hi for --colors (default 0:len-1)");
  sub->add_option("--q", q, "Number of colors for --colors (default: largest digit)");
}

NatColoring ColoringArgs::load() const {
  if (!file.empty()) return coloring_from(read_json_file(file));
  if (colors.empty()) throw MalformedInput("give --coloring or --colors");
  const Interval w = window.empty() ? Interval{0, static_cast<Int>(colors.size()) - 1}
                                    : parse_range(window);
  int qq = q;
  if (qq == 0) {
    for (char ch : colors) qq = std::max(qq, ch - '0');
  }
  return nat_coloring_from_digits(w, qq, colors);
}

namespace {

// d range: explicit lo:hi, else 1..|window| (0..|window| with zero d).
std::vector<Int> d_values_for(const std::string& text, const NatColoring& c, bool zero) {
  if (!text.empty()) return to_vector(parse_range(text));
  return to_vector(Interval{zero ? 0 : 1, std::max<Int>(1, c.window().range.size())});
}

json range_json(const std::vector<Int>& ds) {
  if (ds.empty()) return json::array();
  return {ds.front(), ds.back()};
}

struct SearchArgs {
  ColoringArgs coloring;
  std::string F, d;
  int j = 1;
};

}  // namespace

void add_ramsey_commands(CLI::App& app, Registry& reg) {
  {
    auto* sub = app.add_subcommand("mono", "First monochromatic a + dF in (d, a) order");
    auto args = std::make_shared<SearchArgs>();
    args->coloring.add(sub);
    sub->add_option("--F", args->F, "Configuration, e.g. 0,1,2")->required();
    sub->add_option("--d", args->d, "d range lo:hi");
    sub->callback([&reg, args] {
      reg.action = [&reg, args]() {
        const auto c = args->coloring.load();
        const ConfigSet<Int> F(parse_ints(args->F));
        const auto ds = d_values_for(args->d, c, reg.ctx.allow_zero_d);
        const auto w = find_mono_copy(NatModule{}, c, F, std::span<const Int>(ds),
                                      SearchOptions{reg.ctx.allow_zero_d});
        json out = {{"kind", "mono"}, {"coloring", to_json(c)}, {"F", F.elements()},
                    {"d", range_json(ds)}, {"allow_zero_d", reg.ctx.allow_zero_d}};
        out["witness"] = nullptr;
        if (w) {
          out["witness"] = {{"color", w->color}, {"a", w->copy.a}, {"d", w->copy.d},
                            {"realized", w->copy.realized}};
        }
        return finish(std::move(out), w.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("diffset", "D = {d : some a + dF has color j}");
    auto args = std::make_shared<SearchArgs>();
    args->coloring.add(sub);
    sub->add_option("--F", args->F, "Configuration")->required();
    sub->add_option("--j", args->j, "Color")->required();
    sub->add_option("--d", args->d, "d range lo:hi");
    sub->callback([&reg, args] {
      reg.action = [&reg, args]() {
        const auto c = args->coloring.load();
        const ConfigSet<Int> F(parse_ints(args->F));
        const auto ds = d_values_for(args->d, c, reg.ctx.allow_zero_d);
        const SearchOptions opts{reg.ctx.allow_zero_d};
        const auto D = diff_set(NatModule{}, c, F, args->j, std::span<const Int>(ds), opts);
        // One witness a per d, for the certificate.
        json witnesses = json::array();
        for (Int d : D.D) {
          const Int one[] = {d};
          std::optional<Int> a;
          for_each_copy(NatModule{}, F, c.window(), std::span<const Int>(one),
                        [&](Int aa, Int, auto cells) {
                          for (auto i : cells)
                            if (c.color_at(i) != args->j) return true;
                          a = aa;
                          return false;
                        });
          witnesses.push_back({{"d", d}, {"a", a ? json(*a) : json(nullptr)}});
        }
        json out = {{"kind", "diffset"}, {"coloring", to_json(c)}, {"F", F.elements()},
                    {"j", args->j}, {"d", range_json(ds)}, {"D", D.D}, {"witnesses", witnesses}};
        return finish(std::move(out), !D.D.empty());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("grunwald", "Finitary Grünwald number N(q, F)");
    struct Args {
      int q = 2;
      std::string F, points;
      std::size_t split_depth = 10;
      Int max_n = 0;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--q", args->q, "Number of colors")->required();
    auto* f = sub->add_option("--F", args->F, "F in Z_+, e.g. 0,1,2");
    auto* p = sub->add_option("--F-points", args->points, "F in Z_+^m, e.g. 0,0;0,1;1,0");
    f->excludes(p);
    sub->add_option("--split-depth", args->split_depth, "Depth at which the tree is split");
    sub->add_option("--max-n", args->max_n, "Only look at windows up to this size");
    sub->callback([&reg, args] {
      reg.action = [&reg, args]() {
        GrunwaldOptions opts;
        opts.budget = reg.ctx.budget_or(default_grunwald_budget);
        opts.threads = reg.ctx.threads;
        opts.split_depth = args->split_depth;
        opts.max_n = args->max_n;
        auto stats_json = [](const ExhaustionStats& s) {
          return json{{"nodes", s.nodes},         {"prunes", s.prunes},
                      {"subtrees", s.subtrees},   {"split_depth", s.split_depth},
                      {"threads", s.threads},     {"symmetry_reduced", s.symmetry_reduced}};
        };
        json out = {{"kind", "grunwald"}, {"q", args->q}};
        try {
          if (!args->points.empty()) {
            const ConfigSet<Point> F(parse_points(args->points));
            const auto r = grunwald_number(args->q, F, opts);
            out["F_points"] = F.elements();
            out["N"] = r.N;
            out["exceeds_max_n"] = r.exceeds_max_n;
            out["extremal"] = {{"dim", r.extremal.window().dim},
                               {"side", r.N - 1},
                               {"colors", to_digits(r.extremal.colors())}};
            out["exhaustion"] = stats_json(r.exhaustion);
            return finish(std::move(out), true);
          }
          const ConfigSet<Int> F(parse_ints(args->F));
          const auto r = grunwald_number(args->q, F, opts);
          out["F"] = F.elements();
          out["N"] = r.N;
          out["exceeds_max_n"] = r.exceeds_max_n;
          out["extremal"] = to_json(r.extremal);
          out["exhaustion"] = stats_json(r.exhaustion);
          return finish(std::move(out), true);
        } catch (const GrunwaldBudgetExceeded& e) {
          // Still a usable partial result: N >= lower_bound.
          std::cerr << "error: BudgetExceeded: " << e.what() << '\n';
          out["budget_exceeded"] = true;
          out["lower_bound"] = e.lower_bound();
          out["witness"] = to_digits(e.witness());
          out["holds"] = false;
          return Outcome{exit_input_error, std::move(out)};
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("vdwset", "D_F and its gap certificate for a syndetic S");
    struct Args {
      std::string S, window, d;
      Int mult = 0;
      std::vector<std::string> F;
      std::optional<Int> max_k;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--S", args->S, "S as a comma list");
    sub->add_option("--S-mult", args->mult, "S = multiples of m in the window");
    sub->add_option("--window", args->window, "Window lo:hi")->required();
    sub->add_option("--F", args->F, "Configuration (repeat for several)")->required();
    sub->add_option("--d", args->d, "d range lo:hi (default 1:|window|)");
    sub->add_option("--max-k", args->max_k, "Largest |K| still counted as syndetic");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto w = parse_range(args->window);
        std::vector<Int> S;
        if (args->mult > 0) {
          for (Int x = w.lo; x <= w.hi; ++x)
            if (x % args->mult == 0) S.push_back(x);
        } else {
          S = parse_ints(args->S);
        }
        std::vector<ConfigSet<Int>> Fs;
        for (const auto& f : args->F) Fs.emplace_back(parse_ints(f));
        const auto ds = args->d.empty() ? to_vector(Interval{1, std::max<Int>(1, w.size())})
                                        : to_vector(parse_range(args->d));
        const auto r = verify_vdw_set(S, w, Fs, ds, args->max_k);
        json entries = json::array();
        bool all = true;
        for (const auto& e : r.entries) {
          entries.push_back({{"F", e.F}, {"D", e.D}, {"certificate", to_json(e.certificate)}});
          all = all && e.certificate.verified;
        }
        json out = {{"kind", "vdwset"}, {"S", S}, {"window", {w.lo, w.hi}},
                    {"syndetic_input", r.syndetic_input}, {"entries", entries}};
        if (r.input_certificate) out["input_certificate"] = to_json(*r.input_certificate);
        if (!r.syndetic_input) {
          out["warning"] = "NotSyndeticInput: S is not syndetic in the window";
          std::cerr << "warning: NotSyndeticInput: S is not syndetic in the window\n";
        }
        // A non-syndetic S is outside the claim, so empty D_F is no counterexample.
        return finish(std::move(out), all || !r.syndetic_input);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("diameter", "First a + dF whose f-image has diameter < eps");
    struct Args {
      std::string values_file, f, window, F, d;
      double eps = 0;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--values", args->values_file, "JSON array of numbers or vectors, per cell");
    sub->add_option("--f", args->f, "Built-in f: const:c, identity, frac:alpha");
    sub->add_option("--window", args->window, "Window lo:hi")->required();
    sub->add_option("--eps", args->eps, "Diameter bound")->required();
    sub->add_option("--F", args->F, "Configuration")->required();
    sub->add_option("--d", args->d, "d range lo:hi")->required();
    sub->callback([&reg, args] {
      reg.action = [&reg, args]() {
        const auto w = parse_range(args->window);
        std::vector<std::vector<double>> values;
        if (!args->values_file.empty()) {
          for (const auto& v : read_json_file(args->values_file)) {
            values.push_back(v.is_array() ? v.get<std::vector<double>>()
                                          : std::vector<double>{v.get<double>()});
          }
        } else {
          const auto& f = args->f;
          for (Int n = w.lo; n <= w.hi; ++n) {
            double y = 0;
            if (f.rfind("const:", 0) == 0) {
              y = parse_doubles(f.substr(6)).at(0);
            } else if (f == "identity") {
              y = static_cast<double>(n);
            } else if (f.rfind("frac:", 0) == 0) {
              const double x = static_cast<double>(n) * parse_doubles(f.substr(5)).at(0);
              y = x - std::floor(x);
            } else {
              throw MalformedInput("give --values or --f const:c|identity|frac:alpha");
            }
            values.push_back({y});
          }
        }
        const ConfigSet<Int> F(parse_ints(args->F));
        const auto ds = to_vector(parse_range(args->d));
        const auto hit = diameter_search(w, values, args->eps, F, ds,
                                         SearchOptions{reg.ctx.allow_zero_d});
        json out = {{"kind", "diameter"}, {"window", {w.lo, w.hi}}, {"eps", args->eps},
                    {"F", F.elements()}};
        out["hit"] = nullptr;
        if (hit) {
          json cells = json::array();
          for (Int f : F) {
            const Int x = hit->a + hit->d * f;
            cells.push_back({{"x", x}, {"value", values[static_cast<std::size_t>(x - w.lo)]}});
          }
          out["hit"] = {{"a", hit->a}, {"d", hit->d}, {"diameter", hit->diameter}, {"cells", cells}};
        }
        return finish(std::move(out), hit.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("schur-brauer", "First (j, b, a) with b and a + Fb in B_j");
    auto args = std::make_shared<SearchArgs>();
    args->coloring.add(sub);
    sub->add_option("--F", args->F, "Scalars F")->required();
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto c = args->coloring.load();
        const auto F = parse_ints(args->F);
        const auto w = schur_brauer_search(NatModule{}, c, std::span<const Int>(F));
        json out = {{"kind", "schur-brauer"}, {"coloring", to_json(c)}, {"F", F}};
        out["witness"] = nullptr;
        if (w) out["witness"] = {{"j", w->color}, {"a", w->a}, {"b", w->b}};
        return finish(std::move(out), w.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("partition-check", "Every q-coloring of a finite semimodule");
    struct Args {
      std::string file, preset, F;
      int q = 2;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--file", args->file, "Semimodule JSON file");
    sub->add_option("--preset", args->preset, "boolean-semilattice or regular:zmod:n");
    sub->add_option("--q", args->q, "Number of colors")->required();
    sub->add_option("--F", args->F, "Configuration (element indices)")->required();
    sub->callback([&reg, args] {
      reg.action = [&reg, args]() {
        const auto G = !args->file.empty() ? semimodule_from(read_json_file(args->file))
                                           : semimodule_from(json(args->preset));
        const ConfigSet<std::size_t> F(parse_indices(args->F));
        const auto r = exhaustive_partition_check(G, args->q, F, !reg.ctx.allow_zero_d,
                                                  reg.ctx.budget_or(default_partition_budget));
        json results = json::array();
        for (const auto& c : r.results) {
          json e = {{"colors", c.colors}, {"zero_d_only", c.zero_d_only}};
          e["witness"] = nullptr;
          if (c.witness) {
            e["witness"] = {{"color", c.witness->color}, {"a", c.witness->a}, {"d", c.witness->d}};
          }
          results.push_back(std::move(e));
        }
        return finish({{"kind", "partition-check"}, {"q", args->q}, {"F", F.elements()},
                       {"colorings", r.colorings}, {"passed", r.passed}, {"results", results}},
                      r.all_passed);
      };
    });
  }
}

}  // namespace cli
