#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "litf/closure_system.hpp"
#include "litf/finite_lattice.hpp"
#include "litf/lattice_valued.hpp"

namespace litf {

/// Why a family fails to be a closure system of up-sets.
struct UpSetSystemCheck {
  bool valid = false;
  std::string message;
};

/// Every member an up-set of {0,1}^n, the full cube a member, and closed
/// under intersection. Reports the first violating member or pair.
UpSetSystemCheck validate_closure_system_of_up_sets(std::span<const Subset> members, int n);

/// Builds the closure system, throwing DomainError with the diagnostic when
/// validation fails.
ClosureSystem make_up_set_system(int n, std::vector<Subset> members);

/// x̄: the least member containing x.
Subset closure_of_point(const ClosureSystem& system, Point x);

struct ConditionResult {
  bool holds = false;
  /// Least failing pair, ordered by (x.bits, y.bits).
  std::optional<std::pair<Point, Point>> counterexample;
};

/// Weights over the lattice from_closure_system(F) whose linear combination
/// has cut collection F.
struct LinearRepresentation {
  std::shared_ptr<const FiniteLattice> lattice;
  std::vector<Element> weights;
};

struct RepresentabilityReport {
  /// x̄ ⊆ ȳ implies closure(x ∨ y) = x̄.
  ConditionResult condition_i;
  /// closure(x ∨ y) = x̄ ∩ ȳ.
  ConditionResult condition_ii;
  std::optional<LinearRepresentation> representation;

  bool representable() const noexcept { return representation.has_value(); }
};

/// Evaluates both conditions over all ordered pairs. Throws UsageError for
/// non-cube domains, DomainError when a member is not an up-set, and
/// std::logic_error should the two conditions ever disagree.
RepresentabilityReport check_conditions(const ClosureSystem& system);

/// The first point x whose value differs from the join of the atom values
/// below it (bottom for x = 0), if any.
std::optional<Point> find_zero_join_hom_violation(const LValuedFunction& mu);

/// μ(0) = 0 and μ(⋁A) = ⋁μ(A) for every set A of atoms.
bool is_zero_join_hom(const LValuedFunction& mu);

/// w_i = μ(a_i). Throws DomainError naming the violating atom set when μ is
/// not a 0-∨-homomorphism.
std::vector<Element> extract_weights(const LValuedFunction& mu);

/// Checks the conditions and, when they hold, builds and verifies a linear
/// representation over from_closure_system(F).
RepresentabilityReport synthesize_linear_representation(const ClosureSystem& system);

}  // namespace litf
