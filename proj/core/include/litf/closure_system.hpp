#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litf/bits.hpp"
#include "litf/boolean_domain.hpp"

namespace litf {

using Subset = Bits;

/// A finite base set with printable labels. A cube domain is {0,1}^n with
/// index k ↔ the point with bits k and label its bit-string.
class Domain {
 public:
  static Domain cube(int n);
  /// Throws UsageError on empty or duplicate labels.
  static Domain labeled(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const;
  std::span<const std::string> labels() const& noexcept { return labels_; }
  std::span<const std::string> labels() && = delete;
  std::optional<std::size_t> find(std::string_view label) const;

  bool is_cube() const noexcept { return arity_.has_value(); }
  /// Throws UsageError when the domain is not a cube.
  int cube_arity() const;
  Point point(std::size_t i) const;

  Subset empty_subset() const { return Subset(size()); }
  Subset full_subset() const { return full_bits(size()); }

  /// "{a,b}" for labelled domains; sorted bit-strings for cubes.
  std::string format(const Subset& s) const;
  /// Member labels, sorted.
  std::vector<std::string> subset_labels(const Subset& s) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(std::vector<std::string> labels, std::optional<int> arity)
      : labels_(std::move(labels)), arity_(arity) {}

  std::vector<std::string> labels_;
  std::optional<int> arity_;
};

/// Diagnostic for a candidate closure system.
struct ClosureCheck {
  bool valid = false;
  std::string message;
};

/// Checks that `members` contains the base set and is closed under pairwise
/// intersection. Names the first violating pair.
ClosureCheck check_closure_system(const Domain& domain, std::span<const Subset> members);

/// An intersection-closed family of subsets of a domain containing the
/// domain itself, deduplicated and sorted by bitset value.
class ClosureSystem {
 public:
  /// Throws DomainError when the family is not a closure system.
  ClosureSystem(Domain domain, std::vector<Subset> members);

  /// The smallest closure system containing `generators`.
  static ClosureSystem generated_by(Domain domain, std::vector<Subset> generators);

  const Domain& domain() const noexcept { return domain_; }
  std::span<const Subset> members() const& noexcept { return members_; }
  std::span<const Subset> members() && = delete;
  std::size_t size() const noexcept { return members_.size(); }
  std::optional<std::size_t> index_of(const Subset& s) const;
  /// Index of the intersection of all members containing `s`.
  std::size_t closure_index(const Subset& s) const;

  friend bool operator==(const ClosureSystem&, const ClosureSystem&) = default;

 private:
  Domain domain_;
  std::vector<Subset> members_;
};

}  // namespace litf
