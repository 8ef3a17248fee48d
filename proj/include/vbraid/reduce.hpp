#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vbraid/action.hpp"

namespace vbraid {

struct ReductionStep {
  enum class Kind { Sigma, Perm };
  Kind kind = Kind::Sigma;
  BGen gen;    // when kind == Sigma
  Perm perm;   // when kind == Perm
  std::uint64_t beforeDigest = 0;
  std::uint64_t afterDigest = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Vcd minimal;
  BraidWord extractedWord;  // actWord(extractedWord, minimal) ~ input
};

// One complexity-decreasing step on a simplified diagram: the terminal over
// arc with the leftmost terminal point fires; type (i,i+1) applies
// sigma_i^{-1}, type (i+1,i) applies sigma_i.
std::optional<std::pair<BGen, Vcd>> reductionStep(const Vcd& d);

// p(i+1) == p(i)+1, with i 1-based as in the type labels.
bool intact(const Perm& p, int i);

// Searches S_n exhaustively for a permutation whose action exposes a
// terminal over arc; std::nullopt when none does. Guarded to n <= 10.
std::optional<Perm> findPermWithReduction(const Vcd& d);

// Alternates reduction steps and permutation steps until neither applies.
ReductionTrace normalize(const Vcd& d);

// The braid word drawing d from I_n, when d lies in that orbit.
std::optional<BraidWord> undraw(const Vcd& d);

// Decides equality in VB_n by comparing canonical diagrams of u.I_n, v.I_n.
bool wordsEqual(const BraidWord& u, const BraidWord& v);
bool isTrivial(const BraidWord& w);

}  // namespace vbraid
