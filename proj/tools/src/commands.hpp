#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "io.hpp"

namespace cli {

// Exit codes.
inline constexpr int exit_holds = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_counterexample = 2;

struct Context {
  bool json_output = false;
  std::optional<std::uint64_t> budget;  // --budget, else RAMSEY_BUDGET
  unsigned threads = 1;
  bool allow_zero_d = false;
  std::string emit_cert;

  std::uint64_t budget_or(std::uint64_t fallback) const { return budget.value_or(fallback); }
};

// Every command produces a JSON document with at least "kind" and "holds".
// The same document is printed with --json and written by --emit-cert.
struct Outcome {
  int code = exit_holds;
  json result;
};

struct Registry {
  Context ctx;
  std::function<Outcome()> action;
};

void add_algebra_commands(CLI::App& app, Registry& reg);
void add_ramsey_commands(CLI::App& app, Registry& reg);
void add_dynamics_commands(CLI::App& app, Registry& reg);
void add_ellis_commands(CLI::App& app, Registry& reg);
void add_oracle_commands(CLI::App& app, Registry& reg);
void add_verify_command(CLI::App& app, Registry& reg);

// Re-checks a certificate document using direct evaluation only. Returns
// the verification report; "verified" says whether it holds.
json verify_certificate(const json& cert);

// Shared argument bundles.

struct ColoringArgs {
  std::string file;
  std::string colors;
  std::string window;
  int q = 0;

  void add(CLI::App* sub);
  semiramsey::NatColoring load() const;
};

inline Outcome finish(json result, bool holds) {
  result["holds"] = holds;
  return {holds ? exit_holds : exit_counterexample, std::move(result)};
}

}  // namespace cli
