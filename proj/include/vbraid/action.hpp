#pragma once

#include <string>
#include <vector>

#include "vbraid/braid.hpp"
#include "vbraid/freegroup.hpp"
#include "vbraid/vcd.hpp"

namespace vbraid {

// Left action of a generator on a diagram. The result is simplified. The
// exact surgery rules are documented in docs/action-rules.md; they are
// calibrated so that the coordinates of word images reproduce the Artin and
// welded formulas and all defining relations hold up to equivalence.
Vcd actGenerator(const BGen& g, const Vcd& d);

// g1 g2 ... gk acts as g1.(g2.(...(gk.d))); canonicalizes after every step.
Vcd actWord(const BraidWord& w, const Vcd& d);

// Equals actWord of any factorization of p into adjacent transpositions.
Vcd actPerm(const Perm& p, const Vcd& d);

// The unique classical braid sitting on top of a simplified diagram:
// actWord(invertWord(topBraid(d)), d) has no terminal over arcs.
BraidWord topBraid(const Vcd& d);

// The coset vector (U_1<x_{perm(1)}>, ..., U_n<x_{perm(n)}>) read off the
// diagram: walking each curve, a puncture passed over left-to-right reads
// x_j, right-to-left x_j^{-1}.
struct Coordinates {
  Perm perm;                    // curve -> slot, 0-based
  std::vector<GroupWord> reps;  // coset-normalized, rank n, no q

  friend bool operator==(const Coordinates& a, const Coordinates& b) {
    return a.perm == b.perm && a.reps == b.reps;
  }
  friend bool operator!=(const Coordinates& a, const Coordinates& b) { return !(a == b); }
};

Coordinates coordinates(const Vcd& d);
std::string formatCoordinates(const Coordinates& c);

Vcd mirrorVcd(const Vcd& d);  // left-right reflection (used by tests)

}  // namespace vbraid
