#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "litf/bits.hpp"

namespace litf {

inline constexpr int kMaxArity = 24;
inline constexpr int kMaxEnumerationArity = 5;

/// Number of points of the n-cube.
std::size_t cube_size(int n);

/// A vertex of {0,1}^n. Coordinate x_i lives in bit (i-1) of `bits()`.
class Point {
 public:
  Point(int arity, std::uint32_t bits);

  static Point bottom(int arity) { return Point(arity, 0); }
  static Point top(int arity);
  /// The atom a_i with a single 1 in coordinate i (1-based).
  static Point atom(int arity, int i);
  /// Parses "110" as x_1=1, x_2=1, x_3=0.
  static Point parse(std::string_view text);

  int arity() const noexcept { return arity_; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t index() const noexcept { return bits_; }
  /// Coordinate x_i, 1-based.
  bool operator[](int i) const;
  int weight() const noexcept;

  Point join(Point other) const;
  Point meet(Point other) const;

  std::string to_string() const;

  friend bool operator==(Point, Point) = default;
  friend auto operator<=>(Point, Point) = default;

 private:
  std::uint8_t arity_;
  std::uint32_t bits_;
};

/// Componentwise order; throws UsageError on arity mismatch.
bool leq_points(Point x, Point y);

/// True iff `subset` (a bitset over the 2^n points) is upward closed.
bool is_up_set(const Bits& subset, int n);

/// An upward-closed subset of {0,1}^n.
class UpSet {
 public:
  /// Throws DomainError if `members` is not upward closed.
  UpSet(int arity, Bits members);

  static UpSet empty(int arity);
  static UpSet full(int arity);
  /// The principal filter generated by `p`.
  static UpSet principal(Point p);
  /// The smallest up-set containing every generator.
  static UpSet generated_by(int arity, const std::vector<Point>& generators);

  int arity() const noexcept { return arity_; }
  const Bits& members() const noexcept { return members_; }
  bool contains(Point x) const;
  std::size_t size() const { return members_.count(); }

  friend bool operator==(const UpSet&, const UpSet&) = default;
  friend bool operator<(const UpSet& a, const UpSet& b) { return a.members_ < b.members_; }

 private:
  int arity_;
  Bits members_;
};

/// Members with no strictly smaller member, ascending by bits.
/// Throws DomainError when `subset` is not an up-set.
std::vector<Point> minimal_elements(const Bits& subset, int n);
std::vector<Point> minimal_elements(const UpSet& s);

/// Every up-set of {0,1}^n exactly once, sorted by member bitset value.
/// Throws CapacityError for n > kMaxEnumerationArity.
std::vector<UpSet> enumerate_up_sets(int n);

/// Renders a point subset as its sorted list of bit-strings.
std::vector<std::string> subset_to_bitstrings(const Bits& subset, int n);

}  // namespace litf
