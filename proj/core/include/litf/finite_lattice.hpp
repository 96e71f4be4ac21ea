#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litf/bits.hpp"

namespace litf {

class ClosureSystem;

using Element = std::size_t;
using OrderPair = std::pair<Element, Element>;

/// Outcome of checking a finite relation for the lattice axioms.
struct LatticeCheck {
  bool valid = false;
  std::string reason;
  /// First offending pair in (i, j) lexicographic order, when one exists.
  std::optional<OrderPair> witness;
};

/// Checks that the reflexive-transitive closure of `leq_pairs` on
/// {0..count-1} is antisymmetric and that every pair has a meet and a join.
LatticeCheck verify_lattice(std::size_t count, std::span<const OrderPair> leq_pairs);

/// An explicit finite lattice. Elements are indices 0..size()-1 with opaque
/// string labels; the order is stored as per-element up- and down-sets.
class FiniteLattice {
 public:
  /// Closes `leq_pairs` (covering or full pairs) reflexively and
  /// transitively and verifies the lattice axioms. Throws DomainError with
  /// the verification report on failure.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  std::span<const OrderPair> leq_pairs);

  /// Builds a lattice from an order that the caller guarantees is already
  /// reflexive, transitive, and a lattice: `up[i]` is the set {j : i ≤ j}.
  /// Only sizes are checked.
  static FiniteLattice from_trusted_order(std::vector<std::string> labels, std::vector<Bits> up);

  /// The chain 0 < 1 < ... < length-1 labelled "0".."length-1".
  static FiniteLattice chain(std::size_t length);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Element e) const;
  std::span<const std::string> labels() const& noexcept { return labels_; }
  std::span<const std::string> labels() && = delete;
  std::optional<Element> find(std::string_view label) const;
  /// Like find(), but throws UsageError for unknown labels.
  Element element(std::string_view label) const;

  bool leq(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  /// Join of a family; the empty family yields bottom.
  Element join_all(std::span<const Element> family) const;
  /// Meet of a family; the empty family yields top.
  Element meet_all(std::span<const Element> family) const;
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  const Bits& up(Element e) const;
  const Bits& down(Element e) const;

  /// Pairs (a, b) with a < b and nothing strictly between them.
  std::vector<OrderPair> covering_pairs() const;
  /// Every pair (a, b) with a ≤ b, including the diagonal.
  std::vector<OrderPair> order_pairs() const;

 private:
  FiniteLattice(std::vector<std::string> labels, std::vector<Bits> up);
  void check(Element e) const;
  Element least_of(const Bits& candidates) const;
  Element greatest_of(const Bits& candidates) const;

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::size_t> down_count_;
  // Meet/join tables, filled only when size() <= kTableLimit.
  std::vector<Element> meet_table_;
  std::vector<Element> join_table_;
  Element bottom_ = 0;
  Element top_ = 0;

 public:
  static constexpr std::size_t kTableLimit = 1024;
};

/// Re-verifies the order relation of an existing lattice from scratch.
LatticeCheck verify_lattice(const FiniteLattice& lattice);

/// The principal filter {q : p ≤ q}, ascending by index.
std::vector<Element> up_filter(const FiniteLattice& lattice, Element p);

/// The members of F ordered dually to inclusion: f ≤ g iff g ⊆ f. Element i
/// is `F.members()[i]`; join is intersection, bottom is the whole base set.
FiniteLattice from_closure_system(const ClosureSystem& system);

/// An order isomorphism a → b (result[i] is the image of i), if one exists.
/// Backtracking search; intended for lattices of modest size.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b);

/// Graphviz digraph of the Hasse diagram, edges pointing upward along covers.
std::string to_dot(const FiniteLattice& lattice, std::string_view graph_name = "lattice");

}  // namespace litf
