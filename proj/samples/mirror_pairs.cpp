// Prints every stratum of the degree-6 moduli with its mirror lattice.

#include <iostream>

#include "lpm/mirror/mirror.hpp"

int main() {
  using namespace lpm;
  Degree d = Degree::parse("6");
  auto pair = del_pezzo_pair(d);
  Embedding emb = enumerate_embeddings(d).at(0);
  StrataPoset strata = strata_poset(d, Sublattice(pair.picard, {}, true));
  for (const auto& n : strata.nodes) {
    MirrorPair m = mirror_lattice(d, n.lattice, emb);
    std::cout << n.root_type << " (dim " << n.dimension << ")  mirror " << sublattice_root_type(m.lcheck) << " of rank "
              << m.lcheck.rank() << "\n";
  }
}
