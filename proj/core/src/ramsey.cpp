#include "semiramsey/ramsey.hpp"

#include <limits>

namespace semiramsey {

NatColoring nat_coloring_from_digits(Interval window, int q, const std::string& digits) {
  std::vector<int> colors;
  colors.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw MalformedInput("color digits must be 1..9");
    colors.push_back(ch - '0');
  }
  return NatColoring(NatRange(window), q, std::move(colors));
}

std::string to_digits(const std::vector<int>& colors) {
  std::string out;
  out.reserve(colors.size());
  for (int c : colors) {
    if (c < 1 || c > 9) throw MalformedInput("digit strings support colors 1..9 only");
    out.push_back(static_cast<char>('0' + c));
  }
  return out;
}

VdwReport verify_vdw_set(std::span<const Int> S, Interval window,
                         std::span<const ConfigSet<Int>> F_list, std::span<const Int> d_values,
                         std::optional<Int> max_k) {
  VdwReport report;
  const Int limit = max_k.value_or(std::max<Int>(1, window.size() / 2));
  try {
    auto cert = min_gap_certificate(S, window);
    report.syndetic_input = static_cast<Int>(cert.K.size()) <= limit;
    report.input_certificate = std::move(cert);
  } catch (const EmptyD&) {
    report.syndetic_input = false;
  }

  // Indicator coloring: color 1 on S, color 2 elsewhere.
  std::vector<int> colors(static_cast<std::size_t>(window.size()), 2);
  for (Int s : S) {
    if (window.contains(s)) colors[static_cast<std::size_t>(s - window.lo)] = 1;
  }
  const NatColoring indicator(NatRange(window), 2, std::move(colors));
  const NatModule module;
  for (const auto& F : F_list) {
    VdwEntry entry;
    entry.F = F.elements();
    entry.D = diff_set(module, indicator, F, 1, d_values).D;
    Interval d_window{0, -1};
    if (!d_values.empty()) {
      auto [lo, hi] = std::minmax_element(d_values.begin(), d_values.end());
      d_window = Interval{*lo, *hi};
      // Past (hi - lo) / max F no copy fits, so those d cannot be witnessed.
      const Int fmax = *std::max_element(F.begin(), F.end());
      if (fmax > 0) d_window.hi = std::min(d_window.hi, window.size() > 0 ? (window.size() - 1) / fmax : 0);
    }
    try {
      entry.certificate = min_gap_certificate(entry.D, d_window);
    } catch (const EmptyD&) {
      entry.certificate.window = d_window;
      entry.certificate.verified = false;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::optional<DiameterHit> diameter_search(Interval window,
                                           const std::vector<std::vector<double>>& values,
                                           double epsilon, const ConfigSet<Int>& F,
                                           std::span<const Int> d_values, SearchOptions opts) {
  if (!(epsilon > 0)) throw MalformedInput("epsilon must be positive");
  if (values.size() != static_cast<std::size_t>(window.size())) {
    throw MalformedInput("f must be given on every cell of the window");
  }
  const std::size_t dim = values.empty() ? 0 : values.front().size();
  for (const auto& v : values) {
    if (v.size() != dim) throw MalformedInput("f values must share one dimension");
  }
  std::optional<DiameterHit> hit;
  const NatModule module;
  const NatRange win(window);
  for_each_copy(module, F, win, d_values, [&](Int a, Int d, auto cells) {
    if (!opts.allow_zero_d && d == 0) return true;
    double diam = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t i : cells) {
        lo = std::min(lo, values[i][c]);
        hi = std::max(hi, values[i][c]);
      }
      diam = std::max(diam, hi - lo);
    }
    if (diam < epsilon) {
      hit = DiameterHit{a, d, diam};
      return false;
    }
    return true;
  });
  return hit;
}

PartitionReport exhaustive_partition_check(const FiniteSemimodule& G, int q,
                                           const ConfigSet<std::size_t>& F,
                                           bool require_nonzero_d, std::uint64_t budget) {
  if (q < 1) throw MalformedInput("q must be positive");
  const std::size_t g = G.size();
  const std::size_t m = G.ring().size();
  for (std::size_t f : F) {
    if (f >= g) throw MalformedInput("F element out of range");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (total > budget / static_cast<std::uint64_t>(q)) {
      throw BudgetExceeded("q^|G| colorings exceed the budget", budget);
    }
    total *= static_cast<std::uint64_t>(q);
  }

  // Realized cells of every (d, a), computed once.
  struct Copy {
    std::size_t d, a;
    std::vector<std::size_t> cells;
  };
  std::vector<Copy> copies;
  for (std::size_t d = 0; d < m; ++d) {
    for (std::size_t a = 0; a < g; ++a) {
      Copy c{d, a, {}};
      for (std::size_t f : F) c.cells.push_back(G.add(a, G.act(d, f)));
      copies.push_back(std::move(c));
    }
  }

  PartitionReport report;
  report.colorings = total;
  const bool keep_all = total <= 4096;
  std::vector<int> colors(g, 1);
  for (std::uint64_t n = 0; n < total; ++n) {
    // colors = base-q digits of n, first element most significant
    std::uint64_t rest = n;
    for (std::size_t i = g; i-- > 0;) {
      colors[i] = static_cast<int>(rest % static_cast<std::uint64_t>(q)) + 1;
      rest /= static_cast<std::uint64_t>(q);
    }
    PartitionColoringResult res;
    res.colors = colors;
    std::optional<PartitionWitness> zero_witness;
    for (const auto& c : copies) {
      const bool zero_d = G.is_zero_scalar(c.d);
      if (zero_d && zero_witness) continue;
      const int col = colors[c.cells.front()];
      bool mono = true;
      for (std::size_t x : c.cells) mono = mono && colors[x] == col;
      if (!mono) continue;
      if (zero_d) {
        zero_witness = PartitionWitness{col, c.a, c.d};
        if (!require_nonzero_d && !res.witness) {
          res.witness = zero_witness;
          break;
        }
        continue;
      }
      res.witness = PartitionWitness{col, c.a, c.d};
      break;
    }
    if (!res.witness && zero_witness) res.zero_d_only = true;
    const bool passed = res.witness.has_value();
    if (passed) ++report.passed;
    if (keep_all || !passed) report.results.push_back(std::move(res));
  }
  report.all_passed = report.passed == report.colorings;
  return report;
}

}  // namespace semiramsey
