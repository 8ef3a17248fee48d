#pragma once

#include <random>

#include "vbraid/action.hpp"
#include "vbraid/braid.hpp"
#include "vbraid/vcd.hpp"

namespace vbraid::testutil {

inline BraidWord randomWord(std::mt19937_64& rng, int n, int len, bool sigmaOnly = false) {
  std::vector<BGen> gs;
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> kind(0, sigmaOnly ? 1 : 2);
  for (int i = 0; i < len; ++i) {
    int k = kind(rng);
    if (k == 2)
      gs.push_back(BGen::tau(idx(rng)));
    else
      gs.push_back(BGen::sigma(idx(rng), k == 0 ? +1 : -1));
  }
  return BraidWord(n, std::move(gs));
}

inline Vcd randomDiagram(std::mt19937_64& rng, int n, int len) {
  return actWord(randomWord(rng, n, len), trivialDiagram(n));
}

// The diagram of Example 2.2: three curves a, b, c with upper order
// c3 < b1 < a1 < b2 < c1 < b3 < c2 and base order a0 < b0 < c0.
inline Vcd paperExampleDiagram() {
  Vcd d;
  d.n = 3;
  // ids: a1=0, b1=1, b2=2, b3=3, c1=4, c2=5, c3=6, a0=10, b0=11, c0=12
  d.upper = {6, 1, 0, 2, 4, 3, 5};
  d.base = {10, 11, 12};
  d.curves = {{10, 0}, {11, 1, 2, 3}, {12, 4, 5, 6}};
  return d;
}

}  // namespace vbraid::testutil
