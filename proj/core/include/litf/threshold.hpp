#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litf/boolean_domain.hpp"
#include "litf/finite_lattice.hpp"
#include "litf/free_distributive_lattice.hpp"
#include "litf/lattice_valued.hpp"

namespace litf {

/// f: {0,1}^n → {0,1} as a truth table indexed by Point::bits().
class BooleanFunction {
 public:
  BooleanFunction(int arity, Bits truth);

  static BooleanFunction constant(int arity, bool value);
  /// The characteristic function of a subset of the cube.
  static BooleanFunction indicator(const UpSet& s) { return BooleanFunction(s.arity(), s.members()); }

  int arity() const noexcept { return arity_; }
  const Bits& truth() const noexcept { return truth_; }
  bool operator()(Point x) const;

  /// Position k holds f at the point with bits k.
  std::string to_table() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int arity_;
  Bits truth_;
};

/// w·x: w when x = 1, bottom when x = 0.
Element scalar_mult(const FiniteLattice& lattice, Element w, bool x);
FdlElement scalar_mult(const FdlElement& w, bool x);

/// ⋁_i (w_i · x_i).
Element linear_combination(const FiniteLattice& lattice, std::span<const Element> weights,
                           Point x);
FdlElement linear_combination(std::span<const FdlElement> weights, Point x);

/// Weights and threshold over the free distributive lattice L_D.
struct FdlThresholdRepr {
  std::vector<FdlElement> weights;
  FdlElement threshold;
};

/// Weights and threshold over an explicit finite lattice.
struct LatticeThresholdRepr {
  std::shared_ptr<const FiniteLattice> lattice;
  std::vector<Element> weights;
  Element threshold;
};

/// 1 iff the linear combination at x is ≥ the threshold.
bool eval_threshold(const FdlThresholdRepr& repr, Point x);
bool eval_threshold(const LatticeThresholdRepr& repr, Point x);

/// The Boolean function a representation induces on the whole cube.
BooleanFunction induced_function(const FdlThresholdRepr& repr);
BooleanFunction induced_function(const LatticeThresholdRepr& repr, int arity);

/// First pair x ≤ y (x, y differing in one coordinate) with f(x) = 1 and
/// f(y) = 0, in ascending order of x then y.
std::optional<std::pair<Point, Point>> find_monotonicity_violation(const BooleanFunction& f);

/// Monotonicity, decided both directly and as "the true-set is an up-set";
/// throws std::logic_error should the two ever disagree.
bool is_isotone(const BooleanFunction& f);

/// Weights w_i = generators of L_D; threshold = meet over the minimal true
/// points m of the join of generators in supp(m). Throws DomainError naming a
/// violating pair when f is not isotone.
FdlThresholdRepr synthesize_threshold(const BooleanFunction& f);

/// β̄(x) = ⋁_i (w_i · x_i) over L_D, computed symbolically.
FdlElement beta_bar_value(Point x);
std::vector<FdlElement> beta_bar_symbolic(int n);

/// β̄ as an L-valued function whose codomain is the materialized L_D.
/// Throws CapacityError for n > kMaxEnumerationArity.
LValuedFunction beta_bar(int n);

/// The L-valued function x ↦ ⋁_i (w_i · x_i) over the cube of arity
/// weights.size().
LValuedFunction linear_function(std::shared_ptr<const FiniteLattice> lattice,
                                std::vector<Element> weights);

}  // namespace litf
