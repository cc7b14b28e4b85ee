#include "semiramsey/error.hpp"

namespace semiramsey {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_table: return "MalformedTable";
    case ErrorKind::malformed_input: return "MalformedInput";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::empty_k: return "EmptyK";
    case ErrorKind::empty_d: return "EmptyD";
    case ErrorKind::empty_u: return "EmptyU";
    case ErrorKind::non_commuting: return "NonCommuting";
    case ErrorKind::not_a_cover: return "NotACover";
    case ErrorKind::cocycle_violation: return "CocycleViolation";
    case ErrorKind::base_not_recurrent: return "BaseNotRecurrent";
    case ErrorKind::window_too_small: return "WindowTooSmall";
    case ErrorKind::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::hypothesis_failed: return "HypothesisFailed";
    case ErrorKind::disagreement: return "Disagreement";
  }
  return "Unknown";
}

NonCommuting::NonCommuting(std::size_t i, std::size_t j, std::size_t x)
    : Error(ErrorKind::non_commuting,
            "generators " + std::to_string(i) + " and " + std::to_string(j) +
                " do not commute at state " + std::to_string(x)),
      i_(i), j_(j), x_(x) {}

NotACover::NotACover(std::size_t missing_state)
    : Error(ErrorKind::not_a_cover,
            "cover misses state " + std::to_string(missing_state)),
      missing_(missing_state) {}

CocycleViolation::CocycleViolation(std::int64_t s, std::int64_t t, std::size_t x)
    : Error(ErrorKind::cocycle_violation,
            "cocycle law fails at s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                ", x=" + std::to_string(x)),
      s_(s), t_(t), x_(x) {}

BaseNotRecurrent::BaseNotRecurrent(std::size_t x)
    : Error(ErrorKind::base_not_recurrent,
            "base state " + std::to_string(x) + " is not uniformly recurrent") {}

}  // namespace semiramsey
