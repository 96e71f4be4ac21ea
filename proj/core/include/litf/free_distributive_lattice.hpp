#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litf/boolean_domain.hpp"

namespace litf {

class FiniteLattice;

/// Index set J ⊆ {1..n} as a bitmask (bit j-1 ↔ generator w_j), read as the
/// join of its generators. The empty clause is the bottom element.
using Clause = std::uint32_t;

/// An element of the free distributive lattice on n generators, with bounds
/// adjoined, in canonical conjunctive normal form: a ⊆-antichain of clauses
/// sorted by mask value. Bottom is {∅}; top is the empty clause set.
class FdlElement {
 public:
  static FdlElement top(int arity);
  static FdlElement bottom(int arity);
  /// The generator w_i, 1-based.
  static FdlElement generator(int arity, int i);

  int arity() const noexcept { return arity_; }
  std::span<const Clause> clauses() const& noexcept { return clauses_; }
  std::span<const Clause> clauses() && = delete;
  bool is_top() const noexcept { return clauses_.empty(); }
  bool is_bottom() const noexcept { return clauses_.size() == 1 && clauses_.front() == 0; }

  /// Canonical text, e.g. "(w1 v w2) ^ (w3 v w4)"; bounds print as "0" and "1".
  std::string to_string() const;

  friend bool operator==(const FdlElement&, const FdlElement&) = default;
  friend auto operator<=>(const FdlElement&, const FdlElement&) = default;

 private:
  friend FdlElement canonicalize(std::vector<Clause> raw, int arity);
  FdlElement(int arity, std::vector<Clause> clauses)
      : arity_(arity), clauses_(std::move(clauses)) {}

  int arity_;
  std::vector<Clause> clauses_;
};

/// Drops every clause that contains another clause; duplicates collapse.
FdlElement canonicalize(std::vector<Clause> raw, int arity);

/// a ≤ b iff every clause of b contains some clause of a.
bool leq(const FdlElement& a, const FdlElement& b);
FdlElement meet(const FdlElement& a, const FdlElement& b);
FdlElement join(const FdlElement& a, const FdlElement& b);

/// Interprets w_j as the coordinate x_j.
bool eval(const FdlElement& e, Point x);
UpSet to_up_set(const FdlElement& e);

/// All elements (Dedekind-many) as canonical antichains. Antichains of
/// clause masks are enumerated directly, not derived from up-sets. Order:
/// ascending number of satisfying points, then clause sequence, so the list
/// starts at bottom and ends at top.
/// Throws CapacityError for n > kMaxEnumerationArity.
std::vector<FdlElement> enumerate_elements(int n);

/// Parses `^` (meet), `v` (join), `w1..wn`, `0`, `1` and parentheses.
/// Meet binds tighter than join.
FdlElement parse_fdl(std::string_view text, int arity);

/// The free distributive lattice as an explicit FiniteLattice whose element
/// i is `enumerate_elements(n)[i]`, labelled by its canonical text.
FiniteLattice materialize_free_distributive_lattice(int n);

}  // namespace litf
