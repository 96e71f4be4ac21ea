#pragma once

#include <string_view>

#include "litf/threshold.hpp"

namespace litf::cli {

/// A string of 2^n characters '0'/'1'; position k is the point with bits k
/// (bit i-1 ↔ x_i). Throws ParseError naming the offending position.
BooleanFunction parse_truth_table(std::string_view text);

/// Monotone expressions over x1..xn, or over single letters numbered in
/// order of first appearance (`v` is reserved for join). AND: & ^ * . ·
/// ∧; OR: | v + ∨; constants 0 and 1; parentheses. AND binds tighter.
/// Negation (! ~ - ¬) is rejected. The arity is the highest variable index,
/// raised to `min_arity` when that is larger.
BooleanFunction parse_expression(std::string_view text, int min_arity = 0);

}  // namespace litf::cli
