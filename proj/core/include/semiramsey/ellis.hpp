#pragma once

#include <optional>
#include <vector>

#include "semiramsey/dynamics.hpp"
#include "semiramsey/maps.hpp"

namespace semiramsey {

// For finite X the enveloping semigroup is the composition closure of the
// acting maps: X^X is finite and discrete, so pointwise limits of maps are
// eventually constant sequences of members. No limit step is needed.
struct TransformationSemigroup {
  std::size_t states = 0;
  std::vector<Map> generators;
  // elements[0] is the identity; the rest in breadth-first order of
  // left multiplication by generators.
  std::vector<Map> elements;
  // The identity is not a composition of generators and was added.
  bool identity_adjoined = false;

  std::optional<std::size_t> index_of(const Map& m) const;
};

inline constexpr std::size_t default_semigroup_bound = 1'000'000;

// Throws BudgetExceeded when the closure grows past max_elements.
TransformationSemigroup generate_semigroup(std::size_t states, std::vector<Map> generators,
                                          std::size_t max_elements = default_semigroup_bound);

struct IdealReport {
  // Element indices; each ideal sorted, ideals ordered by first element.
  std::vector<std::vector<std::size_t>> minimal_left_ideals;
  std::vector<std::size_t> idempotents;
  std::vector<std::size_t> minimal_idempotents;
};

// Left ideals are S o f; S o f is minimal iff S o g = S o f for every g in it.
IdealReport ideal_analysis(const TransformationSemigroup& S);

// ---------------------------------------------------------------------------
// Product systems on X^n. A tuple (x_1..x_n) is encoded as
// x_1 + x_2 |X| + ... + x_n |X|^(n-1).

using Tuple = std::vector<std::size_t>;

struct ProductMinimalityReport {
  std::size_t n = 0;
  std::vector<Tuple> lambda;  // sorted
  std::vector<Tuple> sigma;   // union of xi^t[lambda], sorted
  bool sigma_contains_lambda = false;
  bool xi_invariant = false;     // T_1 x .. x T_n maps sigma into itself
  bool theta_invariant = false;  // every diagonal g x .. x g does too
  bool xi_theta_commute = false;
  bool minimal = false;          // every point of sigma reaches every other
  std::optional<std::pair<Tuple, Tuple>> unreachable;  // (from, to) when not minimal
  bool passed = false;
};

inline constexpr std::size_t max_product_states = 10'000'000;

// Checks the hypotheses first: <T_1..T_n> acts minimally on X, and lambda is
// invariant under the diagonal maps and mutually reachable under them.
// Either failure throws HypothesisFailed.
ProductMinimalityReport verify_product_minimality(const FiniteTDS& tds, const std::vector<TimeElement>& T_list,
                             std::vector<Tuple> lambda);

}  // namespace semiramsey
