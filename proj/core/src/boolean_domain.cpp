#include "litf/boolean_domain.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "litf/errors.hpp"

namespace litf {
namespace {

void check_arity(int n) {
  if (n < 1 || n > kMaxArity) {
    throw UsageError("arity " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxArity) + "]");
  }
}

void check_same_arity(Point x, Point y) {
  if (x.arity() != y.arity()) {
    throw UsageError("arity mismatch: " + std::to_string(x.arity()) + " vs " +
                     std::to_string(y.arity()));
  }
}

// Known Dedekind numbers D(0)..D(8), as text so the capacity message can quote them.
constexpr std::array<const char*, 9> kDedekind = {
    "2", "3", "6", "20", "168", "7581", "7828354", "2414682040998",
    "56130437228687557907788"};

void check_enumeration_arity(int n) {
  check_arity(n);
  if (n > kMaxEnumerationArity) {
    std::string projected = n < static_cast<int>(kDedekind.size())
                                ? std::string(kDedekind[static_cast<std::size_t>(n)])
                                : std::string("more than 5.6e22");
    throw CapacityError("exhaustive enumeration capped at n = " +
                        std::to_string(kMaxEnumerationArity) + "; n = " + std::to_string(n) +
                        " would produce " + projected + " up-sets");
  }
}

}  // namespace

std::size_t cube_size(int n) {
  check_arity(n);
  return std::size_t{1} << n;
}

Point::Point(int arity, std::uint32_t bits) : arity_(0), bits_(bits) {
  check_arity(arity);
  if (arity < 32 && (bits >> arity) != 0) {
    throw UsageError("point bits exceed arity " + std::to_string(arity));
  }
  arity_ = static_cast<std::uint8_t>(arity);
}

Point Point::top(int arity) {
  check_arity(arity);
  return Point(arity, (std::uint32_t{1} << arity) - 1);
}

Point Point::atom(int arity, int i) {
  if (i < 1 || i > arity) {
    throw UsageError("atom index " + std::to_string(i) + " outside [1, " +
                     std::to_string(arity) + "]");
  }
  return Point(arity, std::uint32_t{1} << (i - 1));
}

Point Point::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxArity)) {
    throw ParseError("bit-string length must be in [1, " + std::to_string(kMaxArity) + "]", 0);
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw ParseError(std::string("unexpected character '") + text[i] + "' in bit-string", i);
    }
  }
  return Point(static_cast<int>(text.size()), bits);
}

bool Point::operator[](int i) const {
  if (i < 1 || i > arity_) {
    throw UsageError("coordinate " + std::to_string(i) + " outside [1, " +
                     std::to_string(arity_) + "]");
  }
  return (bits_ >> (i - 1)) & 1U;
}

int Point::weight() const noexcept { return std::popcount(bits_); }

Point Point::join(Point other) const {
  check_same_arity(*this, other);
  return Point(arity_, bits_ | other.bits_);
}

Point Point::meet(Point other) const {
  check_same_arity(*this, other);
  return Point(arity_, bits_ & other.bits_);
}

std::string Point::to_string() const {
  std::string s(arity_, '0');
  for (int i = 0; i < arity_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool leq_points(Point x, Point y) {
  check_same_arity(x, y);
  return (x.bits() & ~y.bits()) == 0;
}

bool is_up_set(const Bits& subset, int n) {
  const std::size_t size = cube_size(n);
  if (subset.size() != size) {
    throw UsageError("subset size " + std::to_string(subset.size()) + " does not match 2^" +
                     std::to_string(n));
  }
  for (auto x = subset.find_first(); x != Bits::npos; x = subset.find_next(x)) {
    for (int i = 0; i < n; ++i) {
      const std::size_t up = x | (std::size_t{1} << i);
      if (!subset.test(up)) return false;
    }
  }
  return true;
}

UpSet::UpSet(int arity, Bits members) : arity_(arity), members_(std::move(members)) {
  if (!is_up_set(members_, arity_)) {
    throw DomainError("subset is not upward closed");
  }
}

UpSet UpSet::empty(int arity) { return UpSet(arity, Bits(cube_size(arity))); }

UpSet UpSet::full(int arity) { return UpSet(arity, full_bits(cube_size(arity))); }

UpSet UpSet::principal(Point p) { return generated_by(p.arity(), {p}); }

UpSet UpSet::generated_by(int arity, const std::vector<Point>& generators) {
  const std::size_t size = cube_size(arity);
  Bits members(size);
  for (std::size_t y = 0; y < size; ++y) {
    for (Point g : generators) {
      if (g.arity() != arity) throw UsageError("generator arity mismatch");
      if ((g.bits() & ~static_cast<std::uint32_t>(y)) == 0) {
        members.set(y);
        break;
      }
    }
  }
  return UpSet(arity, std::move(members));
}

bool UpSet::contains(Point x) const {
  if (x.arity() != arity_) throw UsageError("point arity does not match up-set");
  return members_.test(x.index());
}

std::vector<Point> minimal_elements(const Bits& subset, int n) {
  if (!is_up_set(subset, n)) {
    throw DomainError("minimal_elements requires an up-set");
  }
  std::vector<Point> out;
  for (auto x = subset.find_first(); x != Bits::npos; x = subset.find_next(x)) {
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      // In an up-set a member is minimal iff no single-bit predecessor is a member.
      if ((x & bit) && subset.test(x & ~bit)) minimal = false;
    }
    if (minimal) out.emplace_back(n, static_cast<std::uint32_t>(x));
  }
  return out;
}

std::vector<Point> minimal_elements(const UpSet& s) {
  return minimal_elements(s.members(), s.arity());
}

std::vector<UpSet> enumerate_up_sets(int n) {
  check_enumeration_arity(n);
  // Up-sets of {0,1}^k split on x_k into a lower half and an upper half with
  // lower ⊆ upper, both up-sets of {0,1}^(k-1). Masks fit in 32 bits for k <= 5.
  std::vector<std::uint64_t> level = {0, 1};
  for (int k = 1; k <= n; ++k) {
    const unsigned half = 1U << (k - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t lower : level) {
      for (std::uint64_t upper : level) {
        if ((lower & ~upper) == 0) next.push_back(lower | (upper << half));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());

  const std::size_t size = cube_size(n);
  std::vector<UpSet> out;
  out.reserve(level.size());
  for (std::uint64_t mask : level) {
    out.emplace_back(n, Bits(size, mask));
  }
  return out;
}

std::vector<std::string> subset_to_bitstrings(const Bits& subset, int n) {
  std::vector<std::string> out;
  for_each_member(subset, [&](std::size_t x) {
    out.push_back(Point(n, static_cast<std::uint32_t>(x)).to_string());
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace litf
