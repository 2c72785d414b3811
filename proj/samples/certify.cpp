// Certify a free knot as non-cobordant to the trivial one, then watch a
// trivial diagram collapse under the shrink search.

#include <iostream>

#include "freeknot/invariant.hpp"
#include "freeknot/moves.hpp"

int main() {
  using namespace freeknot;

  ChordDiagram knot = parse_gauss_words("1 2 1 3 4 5 6 3 2 7 4 6 7 5");
  for (int n = 1; n <= 3; ++n)
    std::cout << "I^(" << n << ") = " << i_n(knot, n).to_string() << "\n";
  if (!i_n(knot, 3).is_zero())
    std::cout << "nonzero invariant: not cobordant to the trivial knot\n";

  ChordDiagram tangle = parse_gauss_words("1 2 3 3 2 1");
  std::cout << "shrink " << serialize(tangle) << " -> " << serialize(shrink(tangle, 64)) << "\n";
  return 0;
}
