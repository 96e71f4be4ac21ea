#pragma once

#include <memory>
#include <string>
#include <vector>

#include "litf/litf.hpp"

namespace litf::testing {

using LatticePtr = std::shared_ptr<const FiniteLattice>;

LatticePtr share(FiniteLattice lattice);

// 0 < a, b < 1.
FiniteLattice diamond();
// 0 < a < c < 1 and 0 < b < 1, the pentagon.
FiniteLattice pentagon();
// 0 < a, b, c < 1.
FiniteLattice m3();
// The five-element lattice s < p, q < r < 1 used by the running example.
FiniteLattice figure1_lattice();

struct NamedLattice {
  std::string name;
  LatticePtr lattice;
};

// Small lattices used for exhaustive sweeps; none has more than six elements.
std::vector<NamedLattice> small_lattices();

// μ on {a,b,c,d}: a ↦ 1, b ↦ p, c ↦ q, d ↦ s over figure1_lattice().
LValuedFunction figure1_mu();

// {{11}, {11,10}, {11,10,01}, B} over the 2-cube.
ClosureSystem example_chain_system();

// Parses a list of bit-string groups into members of the n-cube.
ClosureSystem cube_system(int n, const std::vector<std::vector<std::string>>& members);
Subset cube_subset(int n, const std::vector<std::string>& points);

}  // namespace litf::testing
