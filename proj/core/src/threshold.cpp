#include "litf/threshold.hpp"

#include <stdexcept>

#include "litf/errors.hpp"

namespace litf {
namespace {

void check_weights(std::size_t count, Point x) {
  if (count != static_cast<std::size_t>(x.arity())) {
    throw UsageError("weight count " + std::to_string(count) + " does not match arity " +
                     std::to_string(x.arity()));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int arity, Bits truth) : arity_(arity), truth_(std::move(truth)) {
  if (truth_.size() != cube_size(arity)) {
    throw UsageError("truth table length " + std::to_string(truth_.size()) +
                     " does not match 2^" + std::to_string(arity));
  }
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  Bits truth(cube_size(arity));
  if (value) truth.set();
  return BooleanFunction(arity, std::move(truth));
}

bool BooleanFunction::operator()(Point x) const {
  if (x.arity() != arity_) throw UsageError("point arity does not match function");
  return truth_.test(x.index());
}

std::string BooleanFunction::to_table() const {
  std::string out(truth_.size(), '0');
  for_each_member(truth_, [&](std::size_t k) { out[k] = '1'; });
  return out;
}

Element scalar_mult(const FiniteLattice& lattice, Element w, bool x) {
  (void)lattice.label(w);  // validates w
  return x ? w : lattice.bottom();
}

FdlElement scalar_mult(const FdlElement& w, bool x) {
  return x ? w : FdlElement::bottom(w.arity());
}

Element linear_combination(const FiniteLattice& lattice, std::span<const Element> weights,
                           Point x) {
  check_weights(weights.size(), x);
  Element acc = lattice.bottom();
  for (int i = 1; i <= x.arity(); ++i) {
    acc = lattice.join(acc, scalar_mult(lattice, weights[static_cast<std::size_t>(i - 1)], x[i]));
  }
  return acc;
}

FdlElement linear_combination(std::span<const FdlElement> weights, Point x) {
  check_weights(weights.size(), x);
  FdlElement acc = FdlElement::bottom(x.arity());
  for (int i = 1; i <= x.arity(); ++i) {
    acc = join(acc, scalar_mult(weights[static_cast<std::size_t>(i - 1)], x[i]));
  }
  return acc;
}

bool eval_threshold(const FdlThresholdRepr& repr, Point x) {
  return leq(repr.threshold, linear_combination(repr.weights, x));
}

bool eval_threshold(const LatticeThresholdRepr& repr, Point x) {
  return repr.lattice->leq(repr.threshold, linear_combination(*repr.lattice, repr.weights, x));
}

BooleanFunction induced_function(const FdlThresholdRepr& repr) {
  const int n = static_cast<int>(repr.weights.size());
  Bits truth(cube_size(n));
  for (std::size_t k = 0; k < truth.size(); ++k) {
    truth[k] = eval_threshold(repr, Point(n, static_cast<std::uint32_t>(k)));
  }
  return BooleanFunction(n, std::move(truth));
}

BooleanFunction induced_function(const LatticeThresholdRepr& repr, int arity) {
  Bits truth(cube_size(arity));
  for (std::size_t k = 0; k < truth.size(); ++k) {
    truth[k] = eval_threshold(repr, Point(arity, static_cast<std::uint32_t>(k)));
  }
  return BooleanFunction(arity, std::move(truth));
}

std::optional<std::pair<Point, Point>> find_monotonicity_violation(const BooleanFunction& f) {
  const int n = f.arity();
  const Bits& t = f.truth();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.test(x)) continue;
    for (int i = 0; i < n; ++i) {
      const std::size_t y = x | (std::size_t{1} << i);
      if (!t.test(y)) {
        return std::pair{Point(n, static_cast<std::uint32_t>(x)),
                         Point(n, static_cast<std::uint32_t>(y))};
      }
    }
  }
  return std::nullopt;
}

bool is_isotone(const BooleanFunction& f) {
  const bool direct = !find_monotonicity_violation(f).has_value();
  const bool via_up_set = is_up_set(f.truth(), f.arity());
  if (direct != via_up_set) throw std::logic_error("isotone checks disagree");
  return direct;
}

FdlThresholdRepr synthesize_threshold(const BooleanFunction& f) {
  if (auto bad = find_monotonicity_violation(f)) {
    throw DomainError("function is not isotone: f(" + bad->first.to_string() + ") = 1 but f(" +
                      bad->second.to_string() + ") = 0");
  }
  const int n = f.arity();
  std::vector<Clause> supports;
  for (Point m : minimal_elements(f.truth(), n)) supports.push_back(m.bits());

  FdlThresholdRepr repr{{}, canonicalize(supports, n)};
  for (int i = 1; i <= n; ++i) repr.weights.push_back(FdlElement::generator(n, i));
  return repr;
}

FdlElement beta_bar_value(Point x) {
  if (x.bits() == 0) return FdlElement::bottom(x.arity());
  return canonicalize({x.bits()}, x.arity());
}

std::vector<FdlElement> beta_bar_symbolic(int n) {
  const std::size_t size = cube_size(n);
  std::vector<FdlElement> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    out.push_back(beta_bar_value(Point(n, static_cast<std::uint32_t>(k))));
  }
  return out;
}

LValuedFunction beta_bar(int n) {
  if (n > kMaxEnumerationArity) {
    throw CapacityError("materialized beta-bar capped at n = " +
                        std::to_string(kMaxEnumerationArity) +
                        "; use beta_bar_symbolic for larger arities");
  }
  auto lattice = std::make_shared<const FiniteLattice>(materialize_free_distributive_lattice(n));
  std::vector<Element> values;
  for (const auto& v : beta_bar_symbolic(n)) values.push_back(lattice->element(v.to_string()));
  return LValuedFunction(Domain::cube(n), std::move(lattice), std::move(values));
}

LValuedFunction linear_function(std::shared_ptr<const FiniteLattice> lattice,
                                std::vector<Element> weights) {
  const int n = static_cast<int>(weights.size());
  const std::size_t size = cube_size(n);
  std::vector<Element> values(size);
  for (std::size_t k = 0; k < size; ++k) {
    values[k] = linear_combination(*lattice, weights, Point(n, static_cast<std::uint32_t>(k)));
  }
  return LValuedFunction(Domain::cube(n), std::move(lattice), std::move(values));
}

}  // namespace litf
