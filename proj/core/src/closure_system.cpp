#include "litf/closure_system.hpp"

#include <algorithm>
#include <set>

#include "litf/errors.hpp"

namespace litf {

Domain Domain::cube(int n) {
  const std::size_t size = cube_size(n);
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    labels.push_back(Point(n, static_cast<std::uint32_t>(k)).to_string());
  }
  return Domain(std::move(labels), n);
}

Domain Domain::labeled(std::vector<std::string> labels) {
  if (labels.empty()) throw UsageError("domain must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw UsageError("duplicate domain label '" + l + "'");
  }
  return Domain(std::move(labels), std::nullopt);
}

const std::string& Domain::label(std::size_t i) const {
  if (i >= labels_.size()) throw UsageError("domain index out of range");
  return labels_[i];
}

std::optional<std::size_t> Domain::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

int Domain::cube_arity() const {
  if (!arity_) throw UsageError("domain is not a Boolean cube");
  return *arity_;
}

Point Domain::point(std::size_t i) const {
  const int n = cube_arity();
  if (i >= labels_.size()) throw UsageError("domain index out of range");
  return Point(n, static_cast<std::uint32_t>(i));
}

std::vector<std::string> Domain::subset_labels(const Subset& s) const {
  if (s.size() != size()) throw UsageError("subset does not match domain size");
  std::vector<std::string> out;
  for_each_member(s, [&](std::size_t i) { out.push_back(labels_[i]); });
  if (is_cube()) std::sort(out.begin(), out.end());
  return out;
}

std::string Domain::format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : subset_labels(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

ClosureCheck check_closure_system(const Domain& domain, std::span<const Subset> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != domain.size()) {
      return {false, "member " + std::to_string(i) + " has wrong size"};
    }
  }
  std::set<Subset> family(members.begin(), members.end());
  if (!family.contains(domain.full_subset())) {
    return {false, "family does not contain the base set"};
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] & members[j])) {
        return {false, "intersection of " + domain.format(members[i]) + " and " +
                           domain.format(members[j]) + " is not a member"};
      }
    }
  }
  return {true, {}};
}

ClosureSystem::ClosureSystem(Domain domain, std::vector<Subset> members)
    : domain_(std::move(domain)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (auto check = check_closure_system(domain_, members_); !check.valid) {
    throw DomainError("not a closure system: " + check.message);
  }
}

ClosureSystem ClosureSystem::generated_by(Domain domain, std::vector<Subset> generators) {
  std::set<Subset> family(generators.begin(), generators.end());
  family.insert(domain.full_subset());
  // Saturate under pairwise intersection.
  std::vector<Subset> frontier(family.begin(), family.end());
  while (!frontier.empty()) {
    std::vector<Subset> added;
    for (const auto& a : frontier) {
      for (const auto& b : family) {
        Subset c = a & b;
        if (!family.contains(c)) added.push_back(std::move(c));
      }
    }
    frontier.clear();
    for (auto& c : added) {
      if (family.insert(c).second) frontier.push_back(std::move(c));
    }
  }
  return ClosureSystem(std::move(domain), std::vector<Subset>(family.begin(), family.end()));
}

std::optional<std::size_t> ClosureSystem::index_of(const Subset& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::size_t ClosureSystem::closure_index(const Subset& s) const {
  if (s.size() != domain_.size()) throw UsageError("subset does not match domain size");
  Subset acc = domain_.full_subset();
  for (const auto& m : members_) {
    if (s.is_subset_of(m)) acc &= m;
  }
  return *index_of(acc);
}

}  // namespace litf
