#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vbraid {

// A virtual curve diagram: two ordered point chains (upper and base line)
// and n curve chains. Each curve starts at a base point, continues through
// upper points and ends at an upper point, its terminal point (puncture).
// Arc kinds along a curve a0 a1 ... ar: (a0,a1) base, (a_{2k-1},a_{2k})
// over, (a_{2k},a_{2k+1}) under. Over arcs never interleave in the upper
// order. Curves are kept sorted by base position: curves[k][0] == base[k].
struct Vcd {
  int n = 0;
  std::vector<int> upper;                 // point ids, left to right
  std::vector<int> base;                  // point ids, left to right
  std::vector<std::vector<int>> curves;   // curves[k][0] in base, rest upper

  friend bool operator==(const Vcd& a, const Vcd& b) {
    return a.n == b.n && a.upper == b.upper && a.base == b.base && a.curves == b.curves;
  }
  friend bool operator!=(const Vcd& a, const Vcd& b) { return !(a == b); }
};

enum class ArcKind { Base, Over, Under };

// Arc `pos` of curve `curve` joins chain[pos] and chain[pos+1].
struct ArcRef {
  int curve = 0;
  int pos = 0;
};

ArcKind arcKindAt(int pos);  // parity rule: 0 base, odd over, even under
// Classifies arc a in d and reports whether it is the terminal arc.
std::pair<ArcKind, bool> arcKind(const Vcd& d, const ArcRef& a);

struct Violation {
  std::string clause;   // which invariant failed
  std::string detail;
};

// Checks every structural invariant; returns the first violation found.
std::optional<Violation> validate(const Vcd& d);
void requireValid(const Vcd& d, const char* where);  // throws std::logic_error

Vcd trivialDiagram(int n);

// Fast lookups derived from a diagram. Invalidated by any mutation.
struct VcdIndex {
  std::unordered_map<int, int> upos;                  // upper id -> index
  std::unordered_map<int, int> bpos;                  // base id -> index
  std::unordered_map<int, std::pair<int, int>> at;    // id -> (curve, chain pos)
  std::vector<int> termini;                           // curve -> terminal id
  std::vector<int> slots;                             // slot -> terminal id
  std::unordered_map<int, int> slotOf;                // terminal id -> slot (0-based)

  bool isUpper(int id) const { return upos.count(id) != 0; }
};
VcdIndex buildIndex(const Vcd& d);

// True iff p lies strictly between a's endpoints in the upper order.
// a must be an over or under arc and p an upper point.
bool encloses(const Vcd& d, const ArcRef& a, int p);

// The crossing relation on under and base arcs. Over arcs are rejected.
bool crosses(const Vcd& d, const ArcRef& a, const ArcRef& b);

// No other arc crosses it and it encloses no pair of crossing under arcs.
bool isFreeUnderArc(const Vcd& d, const ArcRef& a);

// Point-decreasing moves. Preconditions throw std::invalid_argument.
Vcd tMove(const Vcd& d, int curve);
Vcd bMove(const Vcd& d, int curve, int pos);  // removes chain[pos], chain[pos+1]

bool isSimplified(const Vcd& d);
Vcd simplify(const Vcd& d);
// Like simplify but with the applicable move chosen by the caller; used by
// the confluence property tests. pick(count) must return a value in
// [0, count).
Vcd simplifyWithChoice(const Vcd& d, const std::function<size_t(size_t)>& pick);

// Simplify, then relabel points consecutively along the two chains. Equal
// outputs iff inputs are equivalent under relabelling and T/B moves.
Vcd canonicalize(const Vcd& d);
bool canonicalEqual(const Vcd& a, const Vcd& b);
std::uint64_t digest(const Vcd& d);  // of the canonical form

// Number of over arcs strictly enclosing each puncture of the simplified
// representative, and their sum.
std::vector<int> oVector(const Vcd& d);
int complexity(const Vcd& d);

struct TerminalOverArc {
  ArcRef arc;
  int i = 0;          // 1-based: type (i,i+1) or (i+1,i)
  bool leftToRight = true;  // true: type (i,i+1), terminates at slot i+1
};
// Requires a simplified diagram (throws std::logic_error otherwise).
std::vector<TerminalOverArc> terminalOverArcs(const Vcd& d);

// JSON: { "n": int, "upper": [...], "base": [...], "curves": [[...], ...] }
std::string toJson(const Vcd& d);
Vcd fromJson(const std::string& text);

// Per-curve excursion notation, e.g. "curve(b=2): g1 ^g2 .P3".
std::string excursionString(const Vcd& d);

}  // namespace vbraid
