#include "litf/lattice_valued.hpp"

#include <map>
#include <stdexcept>

#include "litf/errors.hpp"

namespace litf {

LValuedFunction::LValuedFunction(Domain domain, std::shared_ptr<const FiniteLattice> codomain,
                                 std::vector<Element> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (!codomain_) throw UsageError("codomain lattice is required");
  if (values_.size() != domain_.size()) {
    throw UsageError("function must assign a value to each of the " +
                     std::to_string(domain_.size()) + " domain elements");
  }
  for (Element v : values_) {
    if (v >= codomain_->size()) throw UsageError("value outside the codomain lattice");
  }
}

Element LValuedFunction::at(Point x) const {
  if (x.arity() != domain_.cube_arity()) throw UsageError("point arity does not match domain");
  return values_[x.index()];
}

Bits LValuedFunction::image() const {
  Bits out(codomain_->size());
  for (Element v : values_) out.set(v);
  return out;
}

Subset cut(const LValuedFunction& mu, Element p) {
  const Bits& above = mu.codomain().up(p);
  Subset out(mu.domain().size());
  const auto values = mu.values();
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (above.test(values[x])) out.set(x);
  }
  return out;
}

ClosureSystem cut_collection(const LValuedFunction& mu) {
  std::vector<Subset> cuts;
  cuts.reserve(mu.codomain().size());
  for (Element p = 0; p < mu.codomain().size(); ++p) cuts.push_back(cut(mu, p));
  return ClosureSystem(mu.domain(), std::move(cuts));
}

bool is_l_valued_up_set(const LValuedFunction& mu) {
  const int n = mu.domain().cube_arity();
  const auto& lattice = mu.codomain();
  const auto values = mu.values();

  bool pointwise = true;
  for (std::size_t x = 0; x < values.size() && pointwise; ++x) {
    for (int i = 0; i < n; ++i) {
      const std::size_t y = x | (std::size_t{1} << i);
      if (!lattice.leq(values[x], values[y])) {
        pointwise = false;
        break;
      }
    }
  }

  bool cuts_are_up_sets = true;
  for (Element p = 0; p < lattice.size() && cuts_are_up_sets; ++p) {
    cuts_are_up_sets = is_up_set(cut(mu, p), n);
  }

  if (pointwise != cuts_are_up_sets) {
    throw std::logic_error("order preservation and up-set cuts disagree");
  }
  return pointwise;
}

ThetaPartition theta_classes(const LValuedFunction& mu) {
  const auto& lattice = mu.codomain();
  ThetaPartition out;
  out.class_of.resize(lattice.size());
  std::map<Subset, std::size_t> by_cut;
  for (Element p = 0; p < lattice.size(); ++p) {
    auto [it, inserted] = by_cut.try_emplace(cut(mu, p), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(p);
    out.class_of[p] = it->second;
  }
  for (const auto& cls : out.classes) {
    const Element sup = lattice.join_all(cls);
    if (out.class_of[sup] != out.suprema.size()) {
      throw std::logic_error("class supremum left its class");
    }
    out.suprema.push_back(sup);
  }
  return out;
}

QuotientLattice quotient_lattice(const LValuedFunction& mu) {
  const auto& lattice = mu.codomain();
  ThetaPartition partition = theta_classes(mu);
  ClosureSystem cuts = cut_collection(mu);

  // [p] ≤ [q] iff ↑q ∩ μ(B) ⊆ ↑p ∩ μ(B).
  const Bits image = mu.image();
  const std::size_t k = partition.classes.size();
  std::vector<Bits> trace;
  std::vector<std::string> labels;
  std::vector<std::size_t> class_to_cut;
  for (const auto& cls : partition.classes) {
    trace.push_back(lattice.up(cls.front()) & image);
    std::string label = "[";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) label += ',';
      label += lattice.label(cls[i]);
    }
    labels.push_back(label + "]");
    class_to_cut.push_back(*cuts.index_of(cut(mu, cls.front())));
  }
  std::vector<OrderPair> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (trace[b].is_subset_of(trace[a])) pairs.emplace_back(a, b);
    }
  }
  return QuotientLattice{FiniteLattice::from_order(std::move(labels), pairs), std::move(partition),
                         std::move(cuts), std::move(class_to_cut)};
}

LValuedFunction canonical_representation(const LValuedFunction& mu) {
  return synthesize_from_closure_system(cut_collection(mu));
}

LValuedFunction synthesize_from_closure_system(const ClosureSystem& system) {
  auto lattice = std::make_shared<const FiniteLattice>(from_closure_system(system));
  const Domain& domain = system.domain();
  std::vector<Element> values(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    Subset singleton = domain.empty_subset();
    singleton.set(x);
    values[x] = system.closure_index(singleton);
  }
  return LValuedFunction(domain, std::move(lattice), std::move(values));
}

}  // namespace litf
