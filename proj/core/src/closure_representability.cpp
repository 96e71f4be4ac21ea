#include "litf/closure_representability.hpp"

#include <set>
#include <stdexcept>

#include "litf/errors.hpp"
#include "litf/threshold.hpp"

namespace litf {
namespace {

std::string point_set_text(const Subset& s, int n) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : subset_to_bitstrings(s, n)) {
    if (!first) out += ',';
    out += b;
    first = false;
  }
  return out + "}";
}

std::vector<Subset> point_closures(const ClosureSystem& system) {
  const Domain& domain = system.domain();
  std::vector<Subset> out;
  out.reserve(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    Subset acc = domain.full_subset();
    for (const auto& m : system.members()) {
      if (m.test(x)) acc &= m;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

UpSetSystemCheck validate_closure_system_of_up_sets(std::span<const Subset> members, int n) {
  const std::size_t size = cube_size(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != size) {
      return {false, "member " + std::to_string(i) + " is not a subset of the " +
                         std::to_string(n) + "-cube"};
    }
    if (!is_up_set(members[i], n)) {
      return {false, "member " + point_set_text(members[i], n) + " is not an up-set"};
    }
  }
  auto check = check_closure_system(Domain::cube(n), members);
  return {check.valid, check.message};
}

ClosureSystem make_up_set_system(int n, std::vector<Subset> members) {
  if (auto check = validate_closure_system_of_up_sets(members, n); !check.valid) {
    throw DomainError("not a closure system of up-sets: " + check.message);
  }
  return ClosureSystem(Domain::cube(n), std::move(members));
}

Subset closure_of_point(const ClosureSystem& system, Point x) {
  if (x.arity() != system.domain().cube_arity()) {
    throw UsageError("point arity does not match the closure system");
  }
  Subset acc = system.domain().full_subset();
  for (const auto& m : system.members()) {
    if (m.test(x.index())) acc &= m;
  }
  return acc;
}

RepresentabilityReport check_conditions(const ClosureSystem& system) {
  const int n = system.domain().cube_arity();
  for (const auto& m : system.members()) {
    if (!is_up_set(m, n)) {
      throw DomainError("member " + point_set_text(m, n) + " is not an up-set");
    }
  }
  const auto bar = point_closures(system);
  const std::size_t size = bar.size();

  RepresentabilityReport report;
  report.condition_i.holds = true;
  report.condition_ii.holds = true;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const Subset& joined = bar[x | y];
      const auto pair = std::pair{Point(n, static_cast<std::uint32_t>(x)),
                                  Point(n, static_cast<std::uint32_t>(y))};
      if (report.condition_i.holds && bar[x].is_subset_of(bar[y]) && joined != bar[x]) {
        report.condition_i = {false, pair};
      }
      if (report.condition_ii.holds && joined != (bar[x] & bar[y])) {
        report.condition_ii = {false, pair};
      }
    }
  }
  if (report.condition_i.holds != report.condition_ii.holds) {
    throw std::logic_error("conditions (i) and (ii) disagree");
  }
  return report;
}

std::optional<Point> find_zero_join_hom_violation(const LValuedFunction& mu) {
  const int n = mu.domain().cube_arity();
  const auto& lattice = mu.codomain();
  std::vector<Element> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(mu.at(Point::atom(n, i)));
  for (std::size_t k = 0; k < mu.domain().size(); ++k) {
    const Point x(n, static_cast<std::uint32_t>(k));
    if (mu(k) != linear_combination(lattice, atoms, x)) return x;
  }
  return std::nullopt;
}

bool is_zero_join_hom(const LValuedFunction& mu) {
  return !find_zero_join_hom_violation(mu).has_value();
}

std::vector<Element> extract_weights(const LValuedFunction& mu) {
  if (auto bad = find_zero_join_hom_violation(mu)) {
    std::string atoms = "{";
    for (int i = 1; i <= bad->arity(); ++i) {
      if ((*bad)[i]) atoms += (atoms.size() > 1 ? ",a" : "a") + std::to_string(i);
    }
    throw DomainError("not a 0-join-homomorphism: image of the join of atoms " + atoms +
                      "} differs from the join of their images");
  }
  const int n = mu.domain().cube_arity();
  std::vector<Element> weights;
  for (int i = 1; i <= n; ++i) weights.push_back(mu.at(Point::atom(n, i)));
  return weights;
}

RepresentabilityReport synthesize_linear_representation(const ClosureSystem& system) {
  RepresentabilityReport report = check_conditions(system);
  if (!report.condition_ii.holds) return report;

  const LValuedFunction mu = synthesize_from_closure_system(system);
  const std::vector<Element> weights = extract_weights(mu);
  const LValuedFunction nu = linear_function(mu.codomain_ptr(), weights);
  if (cut_collection(nu) != system) {
    throw std::logic_error("linear representation does not reproduce the closure system");
  }
  report.representation = LinearRepresentation{mu.codomain_ptr(), weights};
  return report;
}

}  // namespace litf
