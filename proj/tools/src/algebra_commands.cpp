#include "commands.hpp"
#include "semiramsey/configs.hpp"

namespace cli {

using namespace semiramsey;

namespace {

struct StructureArgs {
  std::string file;
  std::string preset;

  void add(CLI::App* sub) {
    auto* f = sub->add_option("--file", file, "Structure JSON file");
    auto* p = sub->add_option("--preset", preset,
                              "boolean, zmod:n, boolean-semilattice, regular:zmod:n, nat:W, "
                              "natvec:n:W");
    f->excludes(p);
  }
  Structure load() const {
    if (!file.empty()) return load_structure(read_json_file(file));
    if (!preset.empty()) return structure_preset(preset);
    throw MalformedInput("give --file or --preset");
  }
};

// D given inline, as a file holding a JSON array, or as the multiples of m
// in the window.
struct SetArgs {
  std::string inline_text;
  std::string file;
  Int multiples_of = 0;

  void add(CLI::App* sub, const std::string& name) {
    sub->add_option("--" + name, inline_text, name + " as a comma list");
    sub->add_option("--" + name + "-file", file, name + " as a JSON array file");
    sub->add_option("--" + name + "-mult", multiples_of, name + " = multiples of m in the window");
  }
  std::vector<Int> load(Interval window) const {
    if (!file.empty()) return read_json_file(file).get<std::vector<Int>>();
    if (multiples_of > 0) {
      std::vector<Int> out;
      for (Int x = window.lo; x <= window.hi; ++x)
        if (x % multiples_of == 0) out.push_back(x);
      return out;
    }
    return parse_ints(inline_text);
  }
};

json copy_json(const CopyOf<NatModule>& c) {
  return {{"a", c.a}, {"d", c.d}, {"realized", c.realized}};
}

}  // namespace

void add_algebra_commands(CLI::App& app, Registry& reg) {
  {
    auto* sub = app.add_subcommand("validate", "Check the semiring or semimodule axioms");
    auto args = std::make_shared<StructureArgs>();
    auto samples = std::make_shared<std::size_t>(10000);
    auto seed = std::make_shared<std::uint64_t>(1);
    args->add(sub);
    sub->add_option("--samples", *samples, "Random law instances for windowed presets");
    sub->add_option("--seed", *seed, "Sampling seed");
    sub->callback([&reg, args, samples, seed] {
      reg.action = [args, samples, seed]() {
        const auto s = args->load();
        ValidationReport report;
        std::string what;
        if (auto* r = std::get_if<FiniteSemiring>(&s)) {
          report = validate_structure(*r);
          report.zero_adjoined = r->zero_adjoined();
          what = "semiring";
        } else if (auto* m = std::get_if<FiniteSemimodule>(&s)) {
          report = validate_structure(*m);
          what = "semimodule";
        } else {
          const auto& w = std::get<WindowedSemiring>(s);
          if (auto* n = std::get_if<NatWindow>(&w)) {
            report = validate_sampled(NatModule(n->bound()), n->bound(), *samples, *seed);
          } else {
            const auto& v = std::get<VectorNat>(w);
            report = validate_sampled(NatVecModule(v.dim(), v.bound()), v.bound(), *samples, *seed);
          }
          what = "windowed";
        }
        json out = {{"kind", "validate"}, {"structure", what}, {"report", to_json(report)}};
        return finish(std::move(out), report.valid);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("nil", "Nil set {t : s + t = 0} of a finite semiring");
    auto args = std::make_shared<StructureArgs>();
    auto s = std::make_shared<std::size_t>(0);
    args->add(sub);
    sub->add_option("--s", *s, "Element index")->required();
    sub->callback([&reg, args, s] {
      reg.action = [args, s]() {
        const auto st = args->load();
        const auto* r = std::get_if<FiniteSemiring>(&st);
        if (!r) throw MalformedInput("nil needs a finite semiring");
        if (*s >= r->size()) throw MalformedInput("element out of range");
        return finish({{"kind", "nil"}, {"s", *s}, {"nil_set", nil_set(*r, *s)}}, true);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("star", "Check that no k nil-sets cover the semiring");
    auto args = std::make_shared<StructureArgs>();
    auto k = std::make_shared<std::size_t>(1);
    args->add(sub);
    sub->add_option("--k", *k, "Number of nil-sets")->required();
    sub->callback([&reg, args, k] {
      reg.action = [&reg, args, k]() {
        const auto s = args->load();
        StarResult r;
        if (auto* fr = std::get_if<FiniteSemiring>(&s)) {
          r = check_star_condition(*fr, *k, reg.ctx.budget_or(default_star_budget));
        } else if (auto* w = std::get_if<WindowedSemiring>(&s)) {
          r = check_star_condition(*w, *k);
        } else {
          throw MalformedInput("star needs a semiring");
        }
        json out = {{"kind", "star"}, {"k", *k}, {"nodes", r.nodes}, {"analytic", r.analytic}};
        out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
        return finish(std::move(out), r.holds);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("copies", "Realize a + dF, or enumerate copies in a window");
    struct Args {
      std::string F, window, d;
      std::optional<Int> a, d_value;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--F", args->F, "Configuration, e.g. 0,1,2")->required();
    sub->add_option("--window", args->window, "Window lo:hi (enumeration)");
    sub->add_option("--d", args->d, "d range lo:hi (enumeration)");
    sub->add_option("--a", args->a, "Realize one copy with this a");
    sub->add_option("--d-value", args->d_value, "d for --a");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const ConfigSet<Int> F(parse_ints(args->F));
        const NatModule module;
        if (args->a) {
          if (!args->d_value) throw MalformedInput("--a needs --d-value");
          const auto c = realize_copy(module, *args->a, *args->d_value, F);
          return finish({{"kind", "copy"}, {"F", F.elements()}, {"copy", copy_json(c)}}, true);
        }
        if (args->window.empty() || args->d.empty()) {
          throw MalformedInput("enumeration needs --window and --d");
        }
        const auto w = parse_range(args->window);
        const auto ds = to_vector(parse_range(args->d));
        const auto copies = enumerate_copies(module, F, NatRange(w), std::span<const Int>(ds));
        json list = json::array();
        for (const auto& c : copies) list.push_back(copy_json(c));
        return finish({{"kind", "copies"},
                       {"F", F.elements()},
                       {"window", {w.lo, w.hi}},
                       {"count", copies.size()},
                       {"copies", list}},
                      true);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("syndetic", "Gap certificate for D (min-gap K, or a given K)");
    struct Args {
      SetArgs D;
      std::string window, K, ring;
    };
    auto args = std::make_shared<Args>();
    args->D.add(sub, "D");
    sub->add_option("--window", args->window, "Window lo:hi (Z_+)");
    sub->add_option("--K", args->K, "Check this K instead of computing the smallest interval");
    sub->add_option("--ring", args->ring, "Finite semiring preset or file: translates in (R, +)");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        if (!args->ring.empty()) {
          const auto ring = args->ring.find(".json") != std::string::npos
                                ? semiring_from(read_json_file(args->ring))
                                : semiring_from(json(args->ring));
          const auto D = args->D.load(Interval{0, static_cast<Int>(ring.size()) - 1});
          std::vector<Int> K;
          if (!args->K.empty()) {
            K = parse_ints(args->K);
          } else if (auto found = find_syndetic_set(ring, D)) {
            K = *found;
          } else {
            return finish({{"kind", "syndetic"}, {"D", D}, {"certificate", nullptr},
                           {"reason", "some translate class never meets D"}},
                          false);
          }
          const auto c = check_syndetic(ring, D, K);
          return finish({{"kind", "syndetic"}, {"ring", to_json(ring)}, {"certificate", to_json(c)}},
                        c.verified);
        }
        if (args->window.empty()) throw MalformedInput("--window is required");
        const auto w = parse_range(args->window);
        const auto D = args->D.load(w);
        const auto c = args->K.empty() ? min_gap_certificate(D, w)
                                       : check_syndetic(D, w, parse_ints(args->K));
        return finish({{"kind", "syndetic"}, {"certificate", to_json(c)}}, c.verified);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("fs", "Finite sums of a generator prefix, optionally met with D");
    struct Args {
      std::string gens, D;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--gens", args->gens, "Generators d_1..d_k")->required();
    sub->add_option("--D", args->D, "Report FS-sums lying in D");
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto g = parse_ints(args->gens);
        const auto fs = fs_prefix(g);
        json out = {{"kind", "fs"}, {"generators", fs.generators}, {"sums", fs.sums}};
        if (!args->D.empty()) {
          const auto D = parse_ints(args->D);
          out["intersection"] = fs_intersection(fs, D);
        }
        return finish(std::move(out), true);
      };
    });
  }
}

}  // namespace cli
