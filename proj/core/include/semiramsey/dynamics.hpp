#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiramsey/algebra.hpp"
#include "semiramsey/configs.hpp"
#include "semiramsey/maps.hpp"

namespace semiramsey {

// A time element of G. With Z_+^k time it is the coefficient vector over the
// k generators; with finite time it is the one-entry vector {index in G}.
using TimeElement = std::vector<Int>;

// A finite topological dynamical system: finite X (discrete topology, so
// every subset is open) with a semimodule acting by self-maps.
//
// Z_+^k time: the action is generated by k pairwise commuting maps and
// phi(c, .) = T_1^c1 o ... o T_k^ck.
// Finite time: R and G are finite and phi(g, .) is tabulated for every g in
// G; phi(e) = id and phi(g + h) = phi(g) o phi(h) are checked exhaustively.
class FiniteTDS {
 public:
  // Throws NonCommuting(i, j, x) for the first non-commuting pair.
  static FiniteTDS nat(std::size_t states, std::vector<Map> generators);
  // maps[g] = phi(g, .). Throws MalformedInput naming (g, h, x) when the
  // action law fails, NonCommuting when two tabulated maps do not commute.
  static FiniteTDS finite(std::size_t states, FiniteSemimodule time, std::vector<Map> maps);

  std::size_t states() const { return states_; }
  bool finite_time() const { return time_.has_value(); }
  const std::optional<FiniteSemimodule>& time() const { return time_; }
  // Z_+^k: the k generators. Finite time: all tabulated maps.
  const std::vector<Map>& acting_maps() const { return maps_; }
  std::size_t generator_count() const { return maps_.size(); }

  // phi(T, .) for a time element T.
  Map phi(const TimeElement& T) const;
  // phi(t T, .); t >= 0 for Z_+ time, t an index of R for finite time.
  Map phi(const TimeElement& T, Int t) const;
  // Time element of the i-th generator (0-based): e_i, or {i} for finite time.
  TimeElement generator(std::size_t i) const;

  void check_time(const TimeElement& T) const;
  void check_states(const std::vector<std::size_t>& subset, const char* what) const;

 private:
  FiniteTDS(std::size_t states, std::vector<Map> maps, std::optional<FiniteSemimodule> time)
      : states_(states), maps_(std::move(maps)), time_(std::move(time)) {}

  std::size_t states_;
  std::vector<Map> maps_;
  std::optional<FiniteSemimodule> time_;
};

// ---------------------------------------------------------------------------

struct MinimalSetReport {
  // Closed mutual-reachability classes, each sorted, listed by smallest state.
  std::vector<std::vector<std::size_t>> minimal_sets;
  std::vector<std::optional<std::size_t>> membership;  // state -> minimal set
};

MinimalSetReport minimal_sets(const FiniteTDS& tds);

// Orbit of x under the acting maps (x included), sorted.
std::vector<std::size_t> orbit(const FiniteTDS& tds, std::size_t x);

// The system restricted to an invariant subset Y, with Y[i] relabeled as i.
// Throws MalformedInput when some acting map leaves Y.
FiniteTDS subsystem(const FiniteTDS& tds, const std::vector<std::size_t>& Y);

// ---------------------------------------------------------------------------

struct HittingOptions {
  // Replace U by U meet Y for the first minimal set Y meeting U.
  bool restrict_to_minimal = false;
};

struct HittingSet {
  std::vector<std::size_t> U;  // after any restriction
  std::vector<TimeElement> T_list;
  Interval window;
  std::vector<Int> N;  // members of the window (finite time: all of R)
  // Z_+ time: t -> (phi(t T_1), .., phi(t T_l)) repeats with `period` from
  // `preperiod` on. Finite time: both 0.
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  // Covers every t: the checked translates span [0, preperiod + period - 1]
  // (or all of R), which by periodicity is every translate.
  SyndeticCertificate certificate;
  // For each t in N, a state x in U with phi(t T_i, x) in U for all i.
  std::vector<std::size_t> witnesses;
  // U misses every minimal set: no recurrence guarantee applies.
  bool not_minimal = false;
  bool restricted = false;
};

// N = {t : some x in U has phi(t T_i, x) in U for all i}. Throws EmptyU.
HittingSet hitting_time_set(const FiniteTDS& tds, std::vector<std::size_t> U,
                            const std::vector<TimeElement>& T_list, Interval window,
                            HittingOptions opts = {});

// Re-derives membership of each listed t directly from its witness state.
bool verify_hitting_witnesses(const FiniteTDS& tds, const HittingSet& h);

// ---------------------------------------------------------------------------

struct RecurrenceReport {
  std::size_t x = 0;
  bool recurrent = false;
  std::optional<std::size_t> minimal_set;
  // Single-generator Z_+ time (or finite time): return times as a hitting
  // set of {x}, with its gap certificate.
  std::optional<HittingSet> return_times;
  // Any time model: K with phi(k_y, y) = x for the k_y chosen per y in the
  // orbit of x. Every translate of the return-time set by g meets K + g,
  // since phi(g, x) lies in the orbit. Empty when x is not recurrent.
  std::vector<TimeElement> K;
  bool K_verified = false;
};

RecurrenceReport uniform_recurrence(const FiniteTDS& tds, std::size_t x,
                                    std::optional<Interval> window = std::nullopt);

// ---------------------------------------------------------------------------

struct CoverResult {
  std::size_t chosen = 0;  // index in the cover
  HittingSet hitting;
};

// First member meeting a minimal set, with its hitting set. Throws NotACover.
CoverResult cover_recurrence(const FiniteTDS& tds,
                             const std::vector<std::vector<std::size_t>>& cover,
                             const std::vector<TimeElement>& T_list, Interval window);

// ---------------------------------------------------------------------------
// Finite group extensions X x K.

class FiniteGroup {
 public:
  // Throws MalformedTable unless op is a group law with the given identity.
  FiniteGroup(Table op, std::size_t identity);
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup klein4();

  std::size_t size() const { return op_.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return op_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const;
  const Table& table() const { return op_; }

 private:
  Table op_;
  std::size_t identity_;
};

// psi[i][x] = psi(T_i, x) for Z_+^k time; product state (x, k) is
// x * |K| + k and T_i acts by (x, k) -> (T_i x, psi[i][x] k).
struct SkewProduct {
  FiniteTDS base;
  FiniteGroup group;
  std::vector<std::vector<std::size_t>> psi;
  FiniteTDS product;

  std::size_t state(std::size_t x, std::size_t k) const { return x * group.size() + k; }
};

// The generator values extend to all of Z_+^k by the cocycle law iff the
// lifted generators commute; a failure is reported as CocycleViolation(i, j,
// x) with 1-based generator indices i, j.
SkewProduct build_skew_product(const FiniteTDS& base, const FiniteGroup& group,
                               std::vector<std::vector<std::size_t>> psi);

// One generator, psi(t, x) given for t = 0..W. Checks psi(0, x) = e and
// psi(s + t, x) = psi(t, T^s x) psi(s, x) whenever s + t <= W; throws
// CocycleViolation(s, t, x) on the first failure.
SkewProduct build_skew_product_from_times(const FiniteTDS& base, const FiniteGroup& group,
                                          const std::vector<std::vector<std::size_t>>& psi_times);

// psi(t T_i, x) from the generator values, by the cocycle law.
std::size_t cocycle_value(const SkewProduct& skew, const TimeElement& T, std::size_t x);

struct LiftReport {
  std::size_t x0 = 0;
  std::vector<bool> fiber_recurrent;  // indexed by k
  bool all_recurrent = false;
  // R_k'(x, k) = (x, k k') commutes with every lifted generator.
  bool rotations_commute = false;
  // Minimal sets of the product project onto minimal sets of the base.
  bool projections_minimal = false;
};

// Throws BaseNotRecurrent when x0 lies in no minimal set of the base.
LiftReport verify_uniform_recurrence_lift(const SkewProduct& skew, std::size_t x0);

}  // namespace semiramsey
