#include "io.hpp"

#include <fstream>
#include <sstream>

#include "semiramsey/error.hpp"

namespace cli {

using namespace semiramsey;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::stringstream ss(text);
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw MalformedInput("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw MalformedInput("not an integer: '" + s + "'");
  return v;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  if (trim(text).empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p));
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (Int v : parse_ints(text)) {
    if (v < 0) throw MalformedInput("negative index " + std::to_string(v));
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) {
    try {
      std::size_t used = 0;
      const auto s = trim(p);
      out.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw MalformedInput("not a number: '" + p + "'");
    }
  }
  return out;
}

Interval parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw MalformedInput("expected lo:hi, got '" + text + "'");
  return Interval{parse_int(parts[0]), parse_int(parts[1])};
}

std::vector<std::vector<Int>> parse_points(const std::string& text) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : split(text, ';')) out.push_back(parse_ints(p));
  return out;
}

std::vector<std::vector<std::size_t>> parse_groups(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : split(text, ';')) out.push_back(parse_indices(p));
  return out;
}

TimeElement parse_time(const std::string& text, const FiniteTDS& tds) {
  if (tds.finite_time()) return TimeElement{parse_int(text)};
  TimeElement T(tds.generator_count(), 0);
  for (const auto& term : split(text, '+')) {
    const auto star = term.find('*');
    const Int c = star == std::string::npos ? 1 : parse_int(term.substr(0, star));
    const Int i = parse_int(star == std::string::npos ? term : term.substr(star + 1));
    if (c < 0) throw MalformedInput("negative coefficient in '" + text + "'");
    if (i < 1 || static_cast<std::size_t>(i) > T.size()) {
      throw MalformedInput("generator " + std::to_string(i) + " out of range 1.." +
                           std::to_string(T.size()));
    }
    T[static_cast<std::size_t>(i - 1)] += c;
  }
  return T;
}

std::vector<TimeElement> parse_time_list(const std::vector<std::string>& texts,
                                         const FiniteTDS& tds) {
  std::vector<TimeElement> out;
  for (const auto& t : texts)
    for (const auto& part : split(t, ',')) out.push_back(parse_time(part, tds));
  if (out.empty()) throw MalformedInput("at least one --T is required");
  return out;
}

// ---------------------------------------------------------------------------

Structure structure_preset(const std::string& name) {
  if (name == "boolean") return FiniteSemiring::boolean();
  if (name == "boolean-semilattice") return FiniteSemimodule::boolean_semilattice();
  if (name.rfind("zmod:", 0) == 0) {
    return FiniteSemiring::integers_mod(static_cast<std::size_t>(parse_int(name.substr(5))));
  }
  if (name.rfind("regular:", 0) == 0) {
    auto inner = structure_preset(name.substr(8));
    if (auto* r = std::get_if<FiniteSemiring>(&inner)) return FiniteSemimodule::regular(*r);
    throw MalformedInput("regular: needs a finite semiring preset");
  }
  if (name.rfind("nat", 0) == 0) return parse_windowed_semiring(name);
  throw MalformedInput("unknown preset '" + name + "'");
}

FiniteSemiring semiring_from(const json& j) {
  if (j.is_string()) {
    auto s = structure_preset(j.get<std::string>());
    if (auto* r = std::get_if<FiniteSemiring>(&s)) return *r;
    throw MalformedInput("preset is not a finite semiring");
  }
  const auto add = field<Table>(j, "add");
  const auto mul = field<Table>(j, "mul");
  const auto unit = field<std::size_t>(j, "unit");
  if (j.contains("size") && field<std::size_t>(j, "size") != add.size()) {
    throw MalformedTable("size does not match the tables");
  }
  if (!j.contains("zero")) return FiniteSemiring::adjoin_zero(add, mul, unit);
  return FiniteSemiring(add, mul, field<std::size_t>(j, "zero"), unit);
}

FiniteSemimodule semimodule_from(const json& j) {
  if (j.is_string()) {
    auto s = structure_preset(j.get<std::string>());
    if (auto* m = std::get_if<FiniteSemimodule>(&s)) return *m;
    throw MalformedInput("preset is not a finite semimodule");
  }
  const auto ring = semiring_from(j.contains("ring") ? j.at("ring") : json("boolean"));
  const auto side = j.value("side", std::string("left"));
  if (side != "left" && side != "right") throw MalformedInput("side must be left or right");
  return FiniteSemimodule(ring, field<Table>(j, "add"), field<std::size_t>(j, "zero"),
                          field<Table>(j, "action"), side == "left" ? Side::left : Side::right);
}

Structure load_structure(const json& j) {
  if (j.is_string()) return structure_preset(j.get<std::string>());
  const auto kind = field<std::string>(j, "kind");
  if (kind == "semiring") return semiring_from(j);
  if (kind == "semimodule") return semimodule_from(j);
  throw MalformedInput("kind must be semiring or semimodule");
}

json to_json(const FiniteSemiring& r) {
  return {{"kind", "semiring"}, {"size", r.size()},       {"add", r.add_table()},
          {"mul", r.mul_table()}, {"zero", r.zero()}, {"unit", r.unit()}};
}

// ---------------------------------------------------------------------------

NatColoring coloring_from(const json& j) {
  const auto w = field<std::vector<Int>>(j, "window");
  if (w.size() != 2) throw MalformedInput("window must be [lo, hi]");
  const int q = field<int>(j, "q");
  const Interval window{w[0], w[1]};
  const auto& colors = j.at("colors");
  if (colors.is_string()) return nat_coloring_from_digits(window, q, colors.get<std::string>());
  return NatColoring(NatRange(window), q, field<std::vector<int>>(j, "colors"));
}

json to_json(const NatColoring& c) {
  const auto& r = c.window().range;
  return {{"window", {r.lo, r.hi}}, {"q", c.q()}, {"colors", to_digits(c.colors())}};
}

// ---------------------------------------------------------------------------

FiniteTDS tds_from(const json& j) {
  const auto states = field<std::size_t>(j, "states");
  const auto maps = field<std::vector<Map>>(j, "generators");
  if (j.contains("time") && j.at("time").is_object()) {
    return FiniteTDS::finite(states, semimodule_from(j.at("time")), maps);
  }
  if (j.contains("time")) {
    const auto t = field<std::string>(j, "time");
    if (t.rfind("nat", 0) != 0) {
      return FiniteTDS::finite(states, semimodule_from(json(t)), maps);
    }
  }
  return FiniteTDS::nat(states, maps);
}

json to_json(const FiniteTDS& tds) {
  json j = {{"states", tds.states()}, {"generators", tds.acting_maps()}};
  j["time"] = "nat";
  if (tds.finite_time()) {
    const auto& m = *tds.time();
    j["time"] = {{"kind", "semimodule"},
                 {"ring", to_json(m.ring())},
                 {"add", m.add_table()},
                 {"zero", m.zero()},
                 {"action", m.action_table()}};
  }
  return j;
}

FiniteGroup group_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "klein4") return FiniteGroup::klein4();
    if (s.rfind("cyclic:", 0) == 0) {
      return FiniteGroup::cyclic(static_cast<std::size_t>(parse_int(s.substr(7))));
    }
    throw MalformedInput("unknown group '" + s + "' (cyclic:n, klein4)");
  }
  return FiniteGroup(field<Table>(j, "table"), j.value("identity", std::size_t{0}));
}

json to_json(const SyndeticCertificate& c) {
  json j = {{"D", c.D},
            {"K", c.K},
            {"window", {c.window.lo, c.window.hi}},
            {"verified", c.verified},
            {"failing_t", nullptr}};
  if (c.failing_t) j["failing_t"] = *c.failing_t;
  if (!c.checked.empty()) j["checked"] = {c.checked.lo, c.checked.hi};
  return j;
}

SyndeticCertificate syndetic_from(const json& j) {
  SyndeticCertificate c;
  c.D = field<std::vector<Int>>(j, "D");
  c.K = field<std::vector<Int>>(j, "K");
  const auto w = field<std::vector<Int>>(j, "window");
  if (w.size() != 2) throw MalformedInput("window must be [lo, hi]");
  c.window = Interval{w[0], w[1]};
  c.verified = j.value("verified", false);
  return c;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"valid", r.valid}, {"violations", v}, {"zero_adjoined", r.zero_adjoined}};
}

json time_json(const std::vector<TimeElement>& T) { return T; }

json to_json(const HittingSet& h) {
  return {{"U", h.U},
          {"T", time_json(h.T_list)},
          {"window", {h.window.lo, h.window.hi}},
          {"N", h.N},
          {"witnesses", h.witnesses},
          {"preperiod", h.preperiod},
          {"period", h.period},
          {"certificate", to_json(h.certificate)},
          {"not_minimal", h.not_minimal},
          {"restricted", h.restricted}};
}

}  // namespace cli
