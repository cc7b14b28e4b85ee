#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiramsey/types.hpp"

namespace semiramsey {

// Square operation table over element indices 0..n-1.
using Table = std::vector<std::vector<std::size_t>>;

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<AxiomViolation> violations;
  // Set when a loader had to adjoin an absorbing zero to zero-free tables.
  bool zero_adjoined = false;

  void add(std::string axiom, std::vector<std::size_t> witness);
};

// A semiring (R,+,.) given by full tables. (R,+) is an abelian monoid with
// identity zero, (R,.) a monoid with identity unit, zero absorbs, and both
// distributive laws hold. The constructor checks shape only; call
// validate_structure for the axioms.
class FiniteSemiring {
 public:
  using element = std::size_t;

  FiniteSemiring(Table add, Table mul, std::size_t zero, std::size_t unit);

  // Tables with no additive identity: a fresh element 0' is appended with
  // 0'+t = t and 0'.t = t.0' = 0'.
  static FiniteSemiring adjoin_zero(Table add, Table mul, std::size_t unit);

  static FiniteSemiring boolean();
  static FiniteSemiring integers_mod(std::size_t n);

  std::size_t size() const { return add_.size(); }
  std::size_t add(std::size_t x, std::size_t y) const { return add_[x][y]; }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x][y]; }
  std::size_t zero() const { return zero_; }
  std::size_t unit() const { return unit_; }
  bool zero_adjoined() const { return zero_adjoined_; }

  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }

 private:
  Table add_;
  Table mul_;
  std::size_t zero_;
  std::size_t unit_;
  bool zero_adjoined_ = false;
};

enum class Side { left, right };

// A semimodule (G, +) over a FiniteSemiring. The action table is stored as
// scalar-major (m x g). Right semimodules are supplied element-major (g x m)
// and transposed on construction, so act(r, g) always means "r acting on g"
// in the side the module was declared with.
class FiniteSemimodule {
 public:
  using element = std::size_t;
  using scalar = std::size_t;

  FiniteSemimodule(FiniteSemiring ring, Table add, std::size_t zero, Table action,
                   Side side = Side::left);

  // R as a module over itself.
  static FiniteSemimodule regular(const FiniteSemiring& ring);
  // {0,1} with join (1+1 = 1) over the Boolean semiring.
  static FiniteSemimodule boolean_semilattice();

  std::size_t size() const { return add_.size(); }
  std::size_t add(std::size_t g, std::size_t h) const { return add_[g][h]; }
  std::size_t act(std::size_t r, std::size_t g) const { return action_[r][g]; }
  std::size_t zero() const { return zero_; }
  bool is_zero_scalar(std::size_t r) const { return r == ring_.zero(); }
  Side side() const { return side_; }

  const FiniteSemiring& ring() const { return ring_; }
  const Table& add_table() const { return add_; }
  // Scalar-major regardless of side.
  const Table& action_table() const { return action_; }

 private:
  FiniteSemiring ring_;
  Table add_;
  std::size_t zero_;
  Table action_;
  Side side_;
};

ValidationReport validate_structure(const FiniteSemiring& ring);
ValidationReport validate_structure(const FiniteSemimodule& module);

// Re-evaluates a reported witness against the tables; true when the axiom
// really fails there.
bool reproduces(const FiniteSemiring& ring, const AxiomViolation& violation);
bool reproduces(const FiniteSemimodule& module, const AxiomViolation& violation);

// {t : s + t = 0}
std::vector<std::size_t> nil_set(const FiniteSemiring& ring, std::size_t s);

struct StarResult {
  bool holds = true;
  // A choice s_1..s_k whose nil-sets cover R, when the condition fails.
  std::optional<std::vector<std::size_t>> witness;
  std::uint64_t nodes = 0;
  // True when decided analytically (windowed families).
  bool analytic = false;
};

inline constexpr std::uint64_t default_star_budget = 50'000'000;

// Checks that no k nil-sets cover R. Choices are enumerated as nondecreasing
// index tuples in lexicographic order, so the witness is the first covering
// tuple.
StarResult check_star_condition(const FiniteSemiring& ring, std::size_t k,
                                std::uint64_t budget = default_star_budget);

// ---------------------------------------------------------------------------
// Windowed models of Z_+ and Z_+^n. Results escaping [0, bound] throw
// Overflow.

class NatWindow {
 public:
  using element = Int;

  explicit NatWindow(Int bound = std::numeric_limits<Int>::max());

  Int bound() const { return bound_; }
  bool contains(Int x) const { return 0 <= x && x <= bound_; }
  Int zero() const { return 0; }
  Int unit() const { return 1; }
  Int add(Int x, Int y) const;
  Int mul(Int x, Int y) const;

 private:
  Int bound_;
};

class VectorNat {
 public:
  using element = Point;

  VectorNat(std::size_t dim, Int bound = std::numeric_limits<Int>::max());

  std::size_t dim() const { return dim_; }
  Int bound() const { return scalar_.bound(); }
  bool contains(const Point& x) const;
  Point zero() const { return Point(dim_, 0); }
  Point unit() const { return Point(dim_, 1); }
  Point add(const Point& x, const Point& y) const;
  Point mul(const Point& x, const Point& y) const;

 private:
  std::size_t dim_;
  NatWindow scalar_;
};

using WindowedSemiring = std::variant<NatWindow, VectorNat>;

// "nat:W" or "natvec:n:W".
WindowedSemiring parse_windowed_semiring(std::string_view preset);

// s + t = 0 in Z_+^n forces s = t = 0.
std::vector<Point> nil_set(const WindowedSemiring& ring, const Point& s);

// (Z_+^n, +) is cancellative and infinite, so the condition holds for every k.
StarResult check_star_condition(const WindowedSemiring& ring, std::size_t k);

// Z_+ acting on itself.
class NatModule {
 public:
  using element = Int;
  using scalar = Int;

  explicit NatModule(Int bound = std::numeric_limits<Int>::max()) : ring_(bound) {}

  const NatWindow& ring() const { return ring_; }
  Int zero() const { return 0; }
  bool is_zero_scalar(Int r) const { return r == 0; }
  Int add(Int g, Int h) const { return ring_.add(g, h); }
  Int act(Int r, Int g) const { return ring_.mul(r, g); }

 private:
  NatWindow ring_;
};

// Z_+^m over Z_+, acting coordinatewise.
class NatVecModule {
 public:
  using element = Point;
  using scalar = Int;

  NatVecModule(std::size_t dim, Int bound = std::numeric_limits<Int>::max())
      : dim_(dim), ring_(bound) {}

  std::size_t dim() const { return dim_; }
  const NatWindow& ring() const { return ring_; }
  Point zero() const { return Point(dim_, 0); }
  bool is_zero_scalar(Int r) const { return r == 0; }
  Point add(const Point& g, const Point& h) const;
  Point act(Int r, const Point& g) const;

 private:
  std::size_t dim_;
  NatWindow ring_;
};

// Samples the semimodule laws at random in-window points (exhaustively when
// the window has at most 8 elements per coordinate and dim == 1).
ValidationReport validate_sampled(const NatModule& module, Int window_hi,
                                  std::size_t samples, std::uint64_t seed);
ValidationReport validate_sampled(const NatVecModule& module, Int window_hi,
                                  std::size_t samples, std::uint64_t seed);

}  // namespace semiramsey
