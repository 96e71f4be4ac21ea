#include <gtest/gtest.h>

#include "catalog.hpp"
#include "oracles.hpp"

namespace litf {
namespace {

BooleanFunction from_mask(int n, unsigned long mask) {
  return BooleanFunction(n, Bits(cube_size(n), mask));
}

TEST(ClassicalThreshold, MajorityOfThree) {
  const BooleanFunction maj = BooleanFunction::indicator(UpSet::generated_by(
      3, {Point::parse("110"), Point::parse("101"), Point::parse("011")}));
  const auto witness = is_classical_threshold(maj);
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(separates(*witness, maj));
  // Symmetric instance: any separating witness has equal weights up to scaling.
  EXPECT_EQ(witness->weights[0], witness->weights[1]);
  EXPECT_EQ(witness->weights[1], witness->weights[2]);
}

TEST(ClassicalThreshold, TwoDisjointPairsIsInfeasible) {
  const BooleanFunction f = BooleanFunction::indicator(
      UpSet::generated_by(4, {Point::parse("1100"), Point::parse("0011")}));
  EXPECT_FALSE(is_classical_threshold(f).has_value());
}

TEST(ClassicalThreshold, Dictator) {
  const auto witness = is_classical_threshold(from_mask(1, 0b10));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(format_rational(witness->weights[0]), "1/1");
  EXPECT_EQ(format_rational(witness->threshold), "1/1");
}

TEST(ClassicalThreshold, Capacity) {
  EXPECT_THROW(is_classical_threshold(BooleanFunction::constant(6, true)), CapacityError);
}

TEST(ClassicalThreshold, CountsMatchBruteForceUpToArityThree) {
  // Threshold functions of n variables: 4, 14, 104.
  const std::size_t expected[] = {4, 14, 104};
  for (int n = 1; n <= 3; ++n) {
    std::size_t count = 0;
    for (unsigned long mask = 0; mask < (1UL << cube_size(n)); ++mask) {
      const BooleanFunction f = from_mask(n, mask);
      const auto witness = is_classical_threshold(f);
      ASSERT_EQ(witness.has_value(), testing::brute_force_classical(f)) << f.to_table();
      if (witness) {
        ++count;
        EXPECT_TRUE(separates(*witness, f)) << f.to_table();
      }
    }
    EXPECT_EQ(count, expected[n - 1]);
  }
}

TEST(ClassicalThreshold, MonotoneCountsUpToArityFive) {
  // Monotone threshold functions: 3, 6, 20, 150, 3287 (constants included).
  const std::size_t expected[] = {3, 6, 20, 150, 3287};
  for (int n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (const UpSet& s : enumerate_up_sets(n)) {
      const BooleanFunction f = BooleanFunction::indicator(s);
      const auto witness = is_classical_threshold(f);
      if (!witness) continue;
      ++count;
      EXPECT_TRUE(separates(*witness, f));
      const bool nonnegative = std::all_of(witness->weights.begin(), witness->weights.end(),
                                           [](const Rational& r) { return r >= 0; });
      if (nonnegative) EXPECT_TRUE(is_isotone(f));
    }
    EXPECT_EQ(count, expected[n - 1]) << n;
  }
}

TEST(ClassicalThreshold, WitnessesWithNonnegativeWeightsAreIsotone) {
  for (unsigned long mask = 0; mask < 256; ++mask) {
    const BooleanFunction f = from_mask(3, mask);
    const auto witness = is_classical_threshold(f);
    if (!witness) continue;
    const bool nonnegative = std::all_of(witness->weights.begin(), witness->weights.end(),
                                         [](const Rational& r) { return r >= 0; });
    if (nonnegative) EXPECT_TRUE(is_isotone(f)) << f.to_table();
  }
}

TEST(FormatRational, AlwaysFraction) {
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(format_rational(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(format_rational(Rational(0)), "0/1");
}

TEST(Separates, RejectsWrongWitness) {
  const BooleanFunction f = from_mask(1, 0b10);
  const ClassicalWitness wrong{{Rational(1)}, Rational(2)};
  EXPECT_FALSE(separates(wrong, f));
}

}  // namespace
}  // namespace litf
