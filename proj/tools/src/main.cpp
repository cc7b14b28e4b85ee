#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "semiramsey/error.hpp"

namespace {

using cli::json;

// Human output: one "key: value" line per field, long arrays elided.
void print_human(const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      std::cout << pad << it.key() << ":\n";
      print_human(v, indent + 2);
      continue;
    }
    if (v.is_array() && !v.empty() && v.front().is_object() && v.size() <= 20) {
      std::cout << pad << it.key() << ":\n";
      for (const auto& item : v) std::cout << pad << "  - " << item.dump() << '\n';
      continue;
    }
    std::string text = v.dump();
    if (text.size() > 160 && v.is_array()) {
      text = text.substr(0, 150) + " ... (" + std::to_string(v.size()) + " items)";
    }
    std::cout << pad << it.key() << ": " << text << '\n';
  }
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("RAMSEY_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw semiramsey::MalformedInput("RAMSEY_BUDGET must be a positive integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey-type searches and recurrence checks on semimodules"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Registry reg;
  std::uint64_t budget = 0;
  app.add_flag("--json", reg.ctx.json_output, "Print the result document as JSON");
  app.add_option("--budget", budget, "Node or enumeration budget (overrides RAMSEY_BUDGET)");
  app.add_option("--threads", reg.ctx.threads, "Worker threads for searches (0 = all cores)");
  app.add_flag("--allow-zero-d", reg.ctx.allow_zero_d, "Admit d = 0 copies in searches");
  app.add_option("--emit-cert", reg.ctx.emit_cert, "Write the certificate JSON to this path");

  cli::add_algebra_commands(app, reg);
  cli::add_ramsey_commands(app, reg);
  cli::add_dynamics_commands(app, reg);
  cli::add_ellis_commands(app, reg);
  cli::add_oracle_commands(app, reg);
  cli::add_verify_command(app, reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << '\n';
    for (const auto* sub : app.get_subcommands()) std::cerr << sub->help();
    if (app.get_subcommands().empty()) std::cerr << app.help();
    return cli::exit_input_error;
  }

  try {
    if (app.count("--budget")) {
      reg.ctx.budget = budget;
    } else {
      reg.ctx.budget = env_budget();
    }
    if (!reg.action) throw semiramsey::MalformedInput("no subcommand given");
    auto out = reg.action();
    if (!reg.ctx.emit_cert.empty()) cli::write_json_file(reg.ctx.emit_cert, out.result);
    if (reg.ctx.json_output) {
      std::cout << out.result.dump(2) << '\n';
    } else {
      print_human(out.result);
    }
    return out.code;
  } catch (const semiramsey::Error& e) {
    if (reg.ctx.json_output) {
      std::cout << json{{"error", semiramsey::to_string(e.kind())}, {"message", e.what()}}.dump(2)
                << '\n';
    }
    std::cerr << "error: " << semiramsey::to_string(e.kind()) << ": " << e.what() << '\n';
    return cli::exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_input_error;
  }
}
