#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiramsey {

// Every failure raised by the library derives from Error. The kind tag lets
// the CLI map failures onto exit codes without a cascade of catch blocks.
enum class ErrorKind {
  malformed_table,
  malformed_input,
  overflow,
  budget_exceeded,
  empty_k,
  empty_d,
  empty_u,
  non_commuting,
  not_a_cover,
  cocycle_violation,
  base_not_recurrent,
  window_too_small,
  degenerate_leading_coefficient,
  hypothesis_failed,
  disagreement,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MalformedTable : public Error {
 public:
  explicit MalformedTable(const std::string& what)
      : Error(ErrorKind::malformed_table, what) {}
};

class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what)
      : Error(ErrorKind::malformed_input, what) {}
};

// Windowed arithmetic left its window. Never clamped.
class Overflow : public Error {
 public:
  explicit Overflow(const std::string& what) : Error(ErrorKind::overflow, what) {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : Error(ErrorKind::budget_exceeded, what), budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

class EmptyK : public Error {
 public:
  EmptyK() : Error(ErrorKind::empty_k, "syndetic check needs a nonempty K") {}
};

class EmptyD : public Error {
 public:
  EmptyD() : Error(ErrorKind::empty_d, "gap certificate needs a nonempty D") {}
};

class EmptyU : public Error {
 public:
  EmptyU() : Error(ErrorKind::empty_u, "hitting-time set needs a nonempty U") {}
};

class NonCommuting : public Error {
 public:
  NonCommuting(std::size_t i, std::size_t j, std::size_t x);

  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }
  std::size_t state() const noexcept { return x_; }

 private:
  std::size_t i_, j_, x_;
};

class NotACover : public Error {
 public:
  explicit NotACover(std::size_t missing_state);

  std::size_t missing_state() const noexcept { return missing_; }

 private:
  std::size_t missing_;
};

class CocycleViolation : public Error {
 public:
  CocycleViolation(std::int64_t s, std::int64_t t, std::size_t x);

  std::int64_t s() const noexcept { return s_; }
  std::int64_t t() const noexcept { return t_; }
  std::size_t state() const noexcept { return x_; }

 private:
  std::int64_t s_, t_;
  std::size_t x_;
};

class BaseNotRecurrent : public Error {
 public:
  explicit BaseNotRecurrent(std::size_t x);
};

class WindowTooSmall : public Error {
 public:
  explicit WindowTooSmall(const std::string& what)
      : Error(ErrorKind::window_too_small, what) {}
};

class DegenerateLeadingCoefficient : public Error {
 public:
  DegenerateLeadingCoefficient()
      : Error(ErrorKind::degenerate_leading_coefficient,
              "polynomial needs degree >= 1 with a nonzero leading coefficient") {}
};

class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(const std::string& what)
      : Error(ErrorKind::hypothesis_failed, what) {}
};

// An optimized result differs from the naive reference. instance() is the
// JSON needed to replay the case.
class Disagreement : public Error {
 public:
  Disagreement(const std::string& what, std::string instance)
      : Error(ErrorKind::disagreement, what), instance_(std::move(instance)) {}

  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string instance_;
};

}  // namespace semiramsey
