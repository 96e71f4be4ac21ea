#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "litf/threshold.hpp"

namespace litf {

using Rational = boost::multiprecision::cpp_rational;

/// Real weights and threshold with f(x) = 1 iff Σ w_i x_i ≥ t, normalized so
/// that Σ w_i x_i ≤ t − 1 on every false point.
struct ClassicalWitness {
  std::vector<Rational> weights;
  Rational threshold;
};

/// Exact feasibility of the classical threshold system by Fourier–Motzkin
/// elimination over the integers. Returns a witness when f is a classical
/// threshold function. Throws CapacityError for n > kMaxEnumerationArity.
std::optional<ClassicalWitness> is_classical_threshold(const BooleanFunction& f);

/// True iff the witness separates f with margin 1 on every point.
bool separates(const ClassicalWitness& witness, const BooleanFunction& f);

/// "p/q" with q > 0 in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace litf
