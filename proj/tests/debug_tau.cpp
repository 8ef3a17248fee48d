// scratch debugging harness (not part of the test suite)
#include <iostream>
#include <random>

#include "testutil.hpp"
#include "vbraid/action.hpp"
#include "vbraid/render.hpp"

using namespace vbraid;
using vbraid::testutil::randomWord;

int main() {
  std::mt19937_64 rng(7);
  // search short words w so that tau_i tau_i . (w . I_n) != (w . I_n)
  for (int len = 1; len <= 6; ++len) {
    for (int trial = 0; trial < 4000; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      BraidWord w = randomWord(rng, n, len);
      Vcd d = actWord(w, trivialDiagram(n));
      for (int i = 1; i <= n - 1; ++i) {
        try {
          Vcd once = actGenerator(BGen::tau(i), d);
          Vcd twice = actGenerator(BGen::tau(i), once);
          if (!canonicalEqual(twice, d)) {
            std::cout << "FAIL tau" << i << "^2 on w = " << formatBraidWord(w) << " (n=" << n
                      << ")\n";
            std::cout << "d = " << toJson(d) << "\n" << toAscii(d) << "\n";
            std::cout << "tau.d = " << toJson(once) << "\n" << toAscii(once) << "\n";
            std::cout << "tau.tau.d:\n" << toAscii(twice) << "\n";
            return 1;
          }
        } catch (const std::exception& e) {
          std::cout << "EXC tau" << i << " on w = " << formatBraidWord(w) << " (n=" << n
                    << "): " << e.what() << "\n";
          std::cout << "d = " << toJson(d) << "\n" << toAscii(d) << "\n";
          return 1;
        }
      }
    }
  }
  std::cout << "no tau failure found\n";
  return 0;
}
