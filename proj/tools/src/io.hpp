#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semiramsey/algebra.hpp"
#include "semiramsey/dynamics.hpp"
#include "semiramsey/ramsey.hpp"

namespace cli {

using nlohmann::json;
using semiramsey::Int;

// Text and file input. Everything here throws semiramsey::MalformedInput on
// bad input, so the caller only maps library errors to exit codes.

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

std::vector<Int> parse_ints(const std::string& text);  // "0,1,2"; "" is empty
std::vector<std::size_t> parse_indices(const std::string& text);
std::vector<double> parse_doubles(const std::string& text);
// "lo:hi"
semiramsey::Interval parse_range(const std::string& text);
// "0,0;0,1;1,0"
std::vector<std::vector<Int>> parse_points(const std::string& text);
// "0,1,2;3,4,5" as groups of state indices
std::vector<std::vector<std::size_t>> parse_groups(const std::string& text);

// A time element over k generators: terms "c*i" or "i" joined by '+', with
// 1-based generator i, e.g. "1", "2*1", "1+3*2". For finite time the text
// is the 0-based index of an element of G.
semiramsey::TimeElement parse_time(const std::string& text, const semiramsey::FiniteTDS& tds);
std::vector<semiramsey::TimeElement> parse_time_list(const std::vector<std::string>& texts,
                                                     const semiramsey::FiniteTDS& tds);

// ---------------------------------------------------------------------------
// Structures: {"kind":"semiring","size":m,"add":..,"mul":..,"zero":i,"unit":j}
// or {"kind":"semimodule","ring":<semiring or preset>,"add":..,"action":..,
// "zero":i,"side":"left"|"right"}. A semiring without "zero" gets one
// adjoined. Presets: "boolean", "zmod:n", "boolean-semilattice",
// "regular:zmod:n", "nat:W", "natvec:n:W".

using Structure = std::variant<semiramsey::FiniteSemiring, semiramsey::FiniteSemimodule,
                               semiramsey::WindowedSemiring>;

Structure load_structure(const json& j);
Structure structure_preset(const std::string& name);
semiramsey::FiniteSemiring semiring_from(const json& j);
semiramsey::FiniteSemimodule semimodule_from(const json& j);
json to_json(const semiramsey::FiniteSemiring& r);

// ---------------------------------------------------------------------------
// Colorings: {"window":[lo,hi],"q":q,"colors":"1122.."|[1,1,2,..]}.

semiramsey::NatColoring coloring_from(const json& j);
json to_json(const semiramsey::NatColoring& c);

// ---------------------------------------------------------------------------
// Systems: {"states":n,"generators":[[..],..]} with optional "time":"nat" or
// "nat:W" (Z_+^k time, the default) or a semimodule object (finite time, one
// map per element of G).

semiramsey::FiniteTDS tds_from(const json& j);
json to_json(const semiramsey::FiniteTDS& tds);

// Groups: {"table":[[..]],"identity":e} or "cyclic:n" / "klein4".
semiramsey::FiniteGroup group_from(const json& j);

json to_json(const semiramsey::SyndeticCertificate& c);
semiramsey::SyndeticCertificate syndetic_from(const json& j);
json to_json(const semiramsey::ValidationReport& r);
json to_json(const semiramsey::HittingSet& h);

json time_json(const std::vector<semiramsey::TimeElement>& T);

}  // namespace cli
