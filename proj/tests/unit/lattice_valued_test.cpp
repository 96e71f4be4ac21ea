#include <gtest/gtest.h>

#include "catalog.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace litf {
namespace {

using testing::figure1_mu;

std::string cut_text(const LValuedFunction& mu, const char* p) {
  return mu.domain().format(cut(mu, mu.codomain().element(p)));
}

TEST(LValuedFunction, RequiresTotality) {
  auto l = testing::share(FiniteLattice::chain(2));
  EXPECT_THROW(LValuedFunction(Domain::cube(1), l, {0}), UsageError);
  EXPECT_THROW(LValuedFunction(Domain::cube(1), l, {0, 2}), UsageError);
  const LValuedFunction mu(Domain::cube(1), l, {0, 1});
  EXPECT_EQ(mu.at(Point::parse("1")), 1u);
}

TEST(Cut, Figure1) {
  const LValuedFunction mu = figure1_mu();
  EXPECT_EQ(cut_text(mu, "p"), "{a,b}");
  EXPECT_EQ(cut_text(mu, "s"), "{a,b,c,d}");
  EXPECT_EQ(cut_text(mu, "r"), "{a}");
  EXPECT_EQ(cut_text(mu, "1"), "{a}");
  EXPECT_THROW(cut(mu, 17), UsageError);
}

TEST(Cut, AntitoneInThreshold) {
  testing::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto mu = testing::random_l_function(rng, Domain::cube(2), testing::random_lattice(rng));
    const FiniteLattice& l = mu.codomain();
    for (Element p = 0; p < l.size(); ++p) {
      for (Element q = 0; q < l.size(); ++q) {
        if (l.leq(p, q)) EXPECT_TRUE(cut(mu, q).is_subset_of(cut(mu, p)));
      }
    }
  }
}

TEST(CutCollection, Examples) {
  std::vector<std::string> got;
  const LValuedFunction mu = figure1_mu();
  const ClosureSystem cuts = cut_collection(mu);
  for (const auto& m : cuts.members()) got.push_back(mu.domain().format(m));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"{a,b,c,d}", "{a,b}", "{a,c}", "{a}"}));

  auto single = testing::share(FiniteLattice::chain(1));
  const LValuedFunction constant(Domain::cube(2), single, {0, 0, 0, 0});
  EXPECT_EQ(cut_collection(constant).size(), 1u);

  // Constant top over a 3-chain: every cut is the whole domain.
  auto chain = testing::share(FiniteLattice::chain(3));
  const LValuedFunction top(Domain::cube(2), chain, {2, 2, 2, 2});
  EXPECT_EQ(cut_collection(top).size(), 1u);
  // Constant middle: the top cut is empty.
  const LValuedFunction mid(Domain::cube(2), chain, {1, 1, 1, 1});
  EXPECT_EQ(cut_collection(mid).size(), 2u);

  const ClosureSystem beta = cut_collection(beta_bar(2));
  std::vector<Bits> ups;
  for (const auto& u : enumerate_up_sets(2)) ups.push_back(u.members());
  EXPECT_EQ(std::vector<Bits>(beta.members().begin(), beta.members().end()), ups);
}

TEST(IsLValuedUpSet, Examples) {
  EXPECT_TRUE(is_l_valued_up_set(beta_bar(3)));
  auto chain = testing::share(FiniteLattice::chain(3));
  // μ(11) < μ(10).
  EXPECT_FALSE(is_l_valued_up_set(LValuedFunction(Domain::cube(2), chain, {0, 2, 1, 1})));
  EXPECT_TRUE(is_l_valued_up_set(LValuedFunction(Domain::cube(2), chain, {1, 1, 1, 1})));
  EXPECT_THROW(is_l_valued_up_set(figure1_mu()), UsageError);
}

TEST(ThetaClasses, Figure1) {
  const LValuedFunction mu = figure1_mu();
  const ThetaPartition theta = theta_classes(mu);
  std::vector<std::vector<std::string>> classes;
  for (const auto& c : theta.classes) {
    std::vector<std::string> labels;
    for (Element e : c) labels.push_back(mu.codomain().label(e));
    classes.push_back(labels);
  }
  EXPECT_EQ(classes, (std::vector<std::vector<std::string>>{{"s"}, {"p"}, {"q"}, {"r", "1"}}));
  const Element r = mu.codomain().element("r");
  EXPECT_EQ(theta.closure(r), mu.codomain().element("1"));
}

TEST(ThetaClasses, InjectiveOntoChainGivesSingletons) {
  auto chain = testing::share(FiniteLattice::chain(4));
  const LValuedFunction mu(Domain::cube(2), chain, {0, 1, 2, 3});
  EXPECT_EQ(theta_classes(mu).classes.size(), 4u);
}

TEST(ThetaClasses, ConstantBottomSplitsOffItsClass) {
  auto chain = testing::share(FiniteLattice::chain(4));
  const LValuedFunction mu(Domain::cube(2), chain, {0, 0, 0, 0});
  const ThetaPartition theta = theta_classes(mu);
  ASSERT_EQ(theta.classes.size(), 2u);
  EXPECT_EQ(theta.classes[0], std::vector<Element>{0});
  EXPECT_EQ(theta.classes[1], (std::vector<Element>{1, 2, 3}));
}

TEST(ThetaClasses, ClosureOperatorAndFilterCriterion) {
  testing::Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto mu = testing::random_l_function(rng, Domain::cube(2), testing::random_lattice(rng));
    const FiniteLattice& l = mu.codomain();
    const ThetaPartition theta = theta_classes(mu);
    const Bits image = mu.image();
    for (Element p = 0; p < l.size(); ++p) {
      const Element cp = theta.closure(p);
      EXPECT_TRUE(l.leq(p, cp));
      EXPECT_EQ(theta.closure(cp), cp);
      EXPECT_EQ(theta.class_of[cp], theta.class_of[p]);
      for (Element q = 0; q < l.size(); ++q) {
        if (l.leq(p, q)) EXPECT_TRUE(l.leq(cp, theta.closure(q)));
        // Same class iff same principal filter within the image.
        const bool same_filter = (l.up(p) & image) == (l.up(q) & image);
        EXPECT_EQ(theta.class_of[p] == theta.class_of[q], same_filter);
      }
    }
  }
}

TEST(QuotientLattice, Figure1IsTheDiamond) {
  const QuotientLattice q = quotient_lattice(figure1_mu());
  EXPECT_TRUE(find_isomorphism(q.lattice, testing::diamond()).has_value());
  EXPECT_EQ(q.lattice.label(q.lattice.top()), "[r,1]");
}

TEST(QuotientLattice, ClassToCutIsAnIsomorphismOntoCutLattice) {
  testing::Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    const auto mu = testing::random_l_function(rng, Domain::cube(2), testing::random_lattice(rng));
    const QuotientLattice q = quotient_lattice(mu);
    const FiniteLattice cuts = from_closure_system(q.cuts);
    ASSERT_EQ(q.lattice.size(), cuts.size());
    for (Element a = 0; a < q.lattice.size(); ++a) {
      EXPECT_EQ(q.cuts.members()[q.class_to_cut[a]], cut(mu, q.partition.suprema[a]));
      for (Element b = 0; b < q.lattice.size(); ++b) {
        EXPECT_EQ(q.lattice.leq(a, b), cuts.leq(q.class_to_cut[a], q.class_to_cut[b]));
      }
    }
  }
}

TEST(QuotientLattice, ConstantFunctions) {
  auto chain = testing::share(FiniteLattice::chain(3));
  EXPECT_EQ(quotient_lattice(LValuedFunction(Domain::cube(1), chain, {1, 1})).lattice.size(), 2u);
  EXPECT_EQ(quotient_lattice(LValuedFunction(Domain::cube(1), chain, {2, 2})).lattice.size(), 1u);
  const LValuedFunction injective(Domain::labeled({"x", "y", "z"}), chain, {0, 1, 2});
  EXPECT_TRUE(find_isomorphism(quotient_lattice(injective).lattice, *chain).has_value());
}

TEST(CanonicalRepresentation, Figure1) {
  const LValuedFunction hat = canonical_representation(figure1_mu());
  std::vector<std::string> values;
  for (std::size_t x = 0; x < 4; ++x) values.push_back(hat.codomain().label(hat(x)));
  EXPECT_EQ(values, (std::vector<std::string>{"{a}", "{a,b}", "{a,c}", "{a,b,c,d}"}));
}

TEST(CanonicalRepresentation, FixpointOnSynthesizedFunctions) {
  const ClosureSystem f = testing::example_chain_system();
  const LValuedFunction mu = synthesize_from_closure_system(f);
  const LValuedFunction hat = canonical_representation(mu);
  for (std::size_t x = 0; x < 4; ++x) {
    EXPECT_EQ(hat.codomain().label(hat(x)), mu.codomain().label(mu(x)));
  }
}

TEST(CanonicalRepresentation, BetaBarTwo) {
  const LValuedFunction hat = canonical_representation(beta_bar(2));
  for (std::uint32_t x = 0; x < 4; ++x) {
    const Point p(2, x);
    EXPECT_EQ(hat.codomain().label(hat.at(p)),
              hat.domain().format(UpSet::principal(p).members()));
  }
  EXPECT_TRUE(is_zero_join_hom(hat));
}

TEST(CanonicalRepresentation, ConverseOfJoinPreservationFails) {
  // μ̂(a) = μ̂(b) ∨ μ̂(c) in the cut lattice, yet μ(a) = 1 while μ(b) ∨ μ(c) = r.
  const LValuedFunction mu = figure1_mu();
  const LValuedFunction hat = canonical_representation(mu);
  EXPECT_EQ(hat(0), hat.codomain().join(hat(1), hat(2)));
  EXPECT_NE(mu(0), mu.codomain().join(mu(1), mu(2)));
}

TEST(SynthesizeFromClosureSystem, Examples) {
  const LValuedFunction mu = synthesize_from_closure_system(testing::example_chain_system());
  const auto value = [&](const char* p) { return mu.codomain().label(mu.at(Point::parse(p))); };
  EXPECT_EQ(value("11"), "{11}");
  EXPECT_EQ(value("10"), "{10,11}");
  EXPECT_EQ(value("01"), "{01,10,11}");
  EXPECT_EQ(value("00"), "{00,01,10,11}");

  const LValuedFunction constant =
      synthesize_from_closure_system(testing::cube_system(2, {{"00", "01", "10", "11"}}));
  EXPECT_EQ(constant.codomain().size(), 1u);

  std::vector<Subset> all;
  for (const auto& u : enumerate_up_sets(2)) all.push_back(u.members());
  const LValuedFunction principal =
      synthesize_from_closure_system(ClosureSystem(Domain::cube(2), all));
  for (std::uint32_t x = 0; x < 4; ++x) {
    const Point p(2, x);
    EXPECT_EQ(principal.codomain().label(principal.at(p)),
              principal.domain().format(UpSet::principal(p).members()));
  }
}

}  // namespace
}  // namespace litf
