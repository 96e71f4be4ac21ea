#include "catalog.hpp"

namespace litf::testing {

LatticePtr share(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

FiniteLattice diamond() {
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FiniteLattice::from_order({"0", "a", "b", "1"}, pairs);
}

FiniteLattice pentagon() {
  const std::vector<OrderPair> pairs{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FiniteLattice::from_order({"0", "a", "c", "b", "1"}, pairs);
}

FiniteLattice m3() {
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_order({"0", "a", "b", "c", "1"}, pairs);
}

FiniteLattice figure1_lattice() {
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}};
  return FiniteLattice::from_order({"s", "p", "q", "r", "1"}, pairs);
}

std::vector<NamedLattice> small_lattices() {
  std::vector<NamedLattice> out;
  for (std::size_t k = 1; k <= 4; ++k) {
    out.push_back({"chain" + std::to_string(k), share(FiniteLattice::chain(k))});
  }
  out.push_back({"diamond", share(diamond())});
  out.push_back({"pentagon", share(pentagon())});
  out.push_back({"m3", share(m3())});
  out.push_back({"figure1", share(figure1_lattice())});
  return out;
}

LValuedFunction figure1_mu() {
  auto lattice = share(figure1_lattice());
  std::vector<Element> values{lattice->element("1"), lattice->element("p"),
                              lattice->element("q"), lattice->element("s")};
  return LValuedFunction(Domain::labeled({"a", "b", "c", "d"}), lattice, std::move(values));
}

Subset cube_subset(int n, const std::vector<std::string>& points) {
  Subset s(cube_size(n));
  for (const auto& p : points) s.set(Point::parse(p).index());
  return s;
}

ClosureSystem cube_system(int n, const std::vector<std::vector<std::string>>& members) {
  std::vector<Subset> subsets;
  for (const auto& m : members) subsets.push_back(cube_subset(n, m));
  return ClosureSystem(Domain::cube(n), std::move(subsets));
}

ClosureSystem example_chain_system() {
  return cube_system(2, {{"11"}, {"11", "10"}, {"11", "10", "01"}, {"11", "10", "01", "00"}});
}

}  // namespace litf::testing
