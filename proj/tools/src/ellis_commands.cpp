#include "commands.hpp"
#include "semiramsey/ellis.hpp"

namespace cli {

using namespace semiramsey;

namespace {

TransformationSemigroup semigroup_of(const FiniteTDS& tds, const Context& ctx) {
  return generate_semigroup(tds.states(), tds.acting_maps(),
                            ctx.budget_or(default_semigroup_bound));
}

json semigroup_json(const TransformationSemigroup& S) {
  return {{"states", S.states},
          {"size", S.elements.size()},
          {"identity_adjoined", S.identity_adjoined},
          {"elements", S.elements}};
}

}  // namespace

void add_ellis_commands(CLI::App& app, Registry& reg) {
  {
    auto* sub = app.add_subcommand("semigroup", "Enveloping semigroup: composition closure of the maps");
    auto file = std::make_shared<std::string>();
    sub->add_option("--tds", *file, "System JSON file")->required();
    sub->callback([&reg, file] {
      reg.action = [&reg, file]() {
        const auto S = semigroup_of(tds_from(read_json_file(*file)), reg.ctx);
        json out = semigroup_json(S);
        out["kind"] = "semigroup";
        return finish(std::move(out), true);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("ideals", "Minimal left ideals and idempotents");
    auto file = std::make_shared<std::string>();
    sub->add_option("--tds", *file, "System JSON file")->required();
    sub->callback([&reg, file] {
      reg.action = [&reg, file]() {
        const auto S = semigroup_of(tds_from(read_json_file(*file)), reg.ctx);
        const auto r = ideal_analysis(S);
        return finish({{"kind", "ideals"},
                       {"semigroup", semigroup_json(S)},
                       {"minimal_left_ideals", r.minimal_left_ideals},
                       {"idempotents", r.idempotents},
                       {"minimal_idempotents", r.minimal_idempotents}},
                      true);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lemma21", "Minimality of the orbit closure of lambda in X^n");
    struct Args {
      std::string file, lambda;
      std::vector<std::string> T;
    };
    auto args = std::make_shared<Args>();
    sub->add_option("--tds", args->file, "System JSON file")->required();
    sub->add_option("--T", args->T, "Time elements T_1..T_n")->required();
    sub->add_option("--lambda", args->lambda, "Tuples of lambda, e.g. 0,0;1,1")->required();
    sub->callback([&reg, args] {
      reg.action = [args]() {
        const auto tds = tds_from(read_json_file(args->file));
        const auto T = parse_time_list(args->T, tds);
        auto lambda = parse_groups(args->lambda);
        for (const auto& t : lambda) {
          if (t.size() != T.size()) throw MalformedInput("each lambda tuple needs one entry per T");
        }
        const auto r = verify_product_minimality(tds, T, std::move(lambda));
        json out = {{"kind", "lemma21"},
                    {"n", r.n},
                    {"lambda", r.lambda},
                    {"sigma", r.sigma},
                    {"sigma_contains_lambda", r.sigma_contains_lambda},
                    {"xi_invariant", r.xi_invariant},
                    {"theta_invariant", r.theta_invariant},
                    {"xi_theta_commute", r.xi_theta_commute},
                    {"minimal", r.minimal}};
        out["unreachable"] = nullptr;
        if (r.unreachable) out["unreachable"] = {r.unreachable->first, r.unreachable->second};
        return finish(std::move(out), r.passed);
      };
    });
  }
}

}  // namespace cli
