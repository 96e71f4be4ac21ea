#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "litf/closure_system.hpp"
#include "litf/finite_lattice.hpp"

namespace litf {

/// A total map from a finite domain into a finite lattice.
class LValuedFunction {
 public:
  /// Throws UsageError unless every domain index has a valid image.
  LValuedFunction(Domain domain, std::shared_ptr<const FiniteLattice> codomain,
                  std::vector<Element> values);

  const Domain& domain() const noexcept { return domain_; }
  const FiniteLattice& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const FiniteLattice>& codomain_ptr() const noexcept { return codomain_; }
  std::span<const Element> values() const& noexcept { return values_; }
  std::span<const Element> values() && = delete;
  Element operator()(std::size_t x) const { return values_.at(x); }
  Element at(Point x) const;

  /// The image μ(B), as a subset of codomain elements.
  Bits image() const;

 private:
  Domain domain_;
  std::shared_ptr<const FiniteLattice> codomain_;
  std::vector<Element> values_;
};

/// The p-cut {x : μ(x) ≥ p}.
Subset cut(const LValuedFunction& mu, Element p);

/// All distinct cuts, as a closure system on the domain.
ClosureSystem cut_collection(const LValuedFunction& mu);

/// Order preservation on a cube domain, decided both pointwise and through
/// the cuts; throws std::logic_error should the two ever disagree.
bool is_l_valued_up_set(const LValuedFunction& mu);

/// Codomain elements grouped by equal cuts.
struct ThetaPartition {
  /// Classes ordered by their least element; each class ascending.
  std::vector<std::vector<Element>> classes;
  /// Class index of every codomain element.
  std::vector<std::size_t> class_of;
  /// Join of each class; always a member of its class.
  std::vector<Element> suprema;

  /// p ↦ ⋁[p], a closure operator on the codomain.
  Element closure(Element p) const { return suprema.at(class_of.at(p)); }
};

ThetaPartition theta_classes(const LValuedFunction& mu);

struct QuotientLattice {
  /// Element i is class i of `partition`, labelled "[p,q,...]".
  FiniteLattice lattice;
  ThetaPartition partition;
  ClosureSystem cuts;
  /// class_to_cut[i] is the index in `cuts.members()` of the cut of class i;
  /// an order isomorphism onto the cut lattice ordered dually to inclusion.
  std::vector<std::size_t> class_to_cut;
};

QuotientLattice quotient_lattice(const LValuedFunction& mu);

/// x ↦ intersection of all cuts containing x, valued in the cut lattice.
LValuedFunction canonical_representation(const LValuedFunction& mu);

/// x ↦ intersection of all members containing x, valued in
/// from_closure_system(F). Its cut collection is exactly F.
LValuedFunction synthesize_from_closure_system(const ClosureSystem& system);

}  // namespace litf
