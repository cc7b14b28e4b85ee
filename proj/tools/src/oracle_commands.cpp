#include "commands.hpp"
#include "semiramsey/oracle.hpp"

namespace cli {

using namespace semiramsey;

namespace {

json report_json(const DiffReport& r) {
  return {{"operation", r.operation},
          {"instance", json::parse(r.instance)},
          {"optimized", json::parse(r.optimized)},
          {"naive", json::parse(r.naive)},
          {"agree", r.agree}};
}

}  // namespace

void add_oracle_commands(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("oracle-diff", "Compare the optimized engines with naive loops");
  struct Args {
    std::string suite = "mono", replay;
    std::uint64_t seed = 1;
    std::size_t instances = 0;
  };
  auto args = std::make_shared<Args>();
  sub->add_option("--suite", args->suite, "mono, diffset, hitting, grunwald");
  sub->add_option("--seed", args->seed, "Generator seed");
  sub->add_option("--instances", args->instances, "Instance count (0: suite default)");
  sub->add_option("--replay", args->replay, "Re-run one instance JSON file");
  sub->callback([&reg, args] {
    reg.action = [args]() {
      if (!args->replay.empty()) {
        const auto r = replay(read_json_file(args->replay).dump());
        return finish({{"kind", "oracle-diff"}, {"reports", json::array({report_json(r)})},
                       {"disagreements", r.agree ? 0 : 1}},
                      r.agree);
      }
      CrossCheckOptions opts;
      opts.instances = args->instances;
      opts.throw_on_disagreement = false;
      const auto suite = parse_suite(args->suite);
      const auto reports = cross_check(suite, args->seed, opts);
      json bad = json::array();
      for (const auto& r : reports)
        if (!r.agree) bad.push_back(report_json(r));
      return finish({{"kind", "oracle-diff"},
                     {"suite", to_string(suite)},
                     {"seed", args->seed},
                     {"instances", reports.size()},
                     {"disagreements", bad.size()},
                     {"reports", bad}},
                    bad.empty());
    };
  });
}

}  // namespace cli
