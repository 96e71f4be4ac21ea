#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace litf {

/// Subset of a finite indexed set. For equal sizes `operator<` compares the
/// bitsets as unsigned numbers, which is the canonical order used for every
/// sorted family in the library.
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline bool is_subset(const Bits& a, const Bits& b) { return a.is_subset_of(b); }

/// Calls `fn(index)` for every set bit, ascending.
template <class Fn>
void for_each_member(const Bits& s, Fn&& fn) {
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    fn(static_cast<std::size_t>(i));
  }
}

inline std::vector<std::size_t> members_of(const Bits& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

inline Bits full_bits(std::size_t size) {
  Bits b(size);
  b.set();
  return b;
}

}  // namespace litf
