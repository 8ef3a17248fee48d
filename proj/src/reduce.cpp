#include "vbraid/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbraid {

std::optional<std::pair<BGen, Vcd>> reductionStep(const Vcd& d) {
  if (!isSimplified(d)) throw std::logic_error("reductionStep: diagram not simplified");
  auto toas = terminalOverArcs(d);
  if (toas.empty()) return std::nullopt;
  VcdIndex ix = buildIndex(d);
  const TerminalOverArc* best = nullptr;
  int bestPos = -1;
  for (const auto& t : toas) {
    int pos = ix.upos.at(d.curves[t.arc.curve].back());
    if (!best || pos < bestPos) {
      best = &t;
      bestPos = pos;
    }
  }
  BGen g = best->leftToRight ? BGen::sigma(best->i, -1) : BGen::sigma(best->i, +1);
  Vcd next = simplify(actGenerator(g, d));
  if (complexity(next) >= complexity(d))
    throw std::logic_error("reductionStep: complexity did not decrease");
  return std::make_pair(g, next);
}

bool intact(const Perm& p, int i) {
  if (i < 1 || i >= p.size()) throw std::invalid_argument("intact: index out of range");
  return p(i) == p(i - 1) + 1;  // 0-based storage of the 1-based condition
}

std::optional<Perm> findPermWithReduction(const Vcd& dIn) {
  Vcd d = simplify(dIn);
  if (!terminalOverArcs(d).empty())
    throw std::logic_error("findPermWithReduction: diagram already reduces");
  // tau actions never create over arcs, so a diagram without over arcs has
  // no permutation image with a terminal over arc
  bool anyOver = false;
  for (const auto& ch : d.curves)
    if (ch.size() >= 3) anyOver = true;
  if (!anyOver) return std::nullopt;
  if (d.n > 10) throw std::invalid_argument("findPermWithReduction: n too large for S_n search");

  std::vector<int> img(d.n);
  for (int k = 0; k < d.n; ++k) img[k] = k;
  do {
    Perm p{img};
    if (p.isIdentity()) continue;
    Vcd moved = simplify(actPerm(p, d));
    if (!terminalOverArcs(moved).empty()) return p;
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

ReductionTrace normalize(const Vcd& dIn) {
  ReductionTrace tr;
  Vcd cur = canonicalize(dIn);
  for (;;) {
    if (auto st = reductionStep(cur)) {
      ReductionStep step;
      step.kind = ReductionStep::Kind::Sigma;
      step.gen = st->first;
      step.beforeDigest = digest(cur);
      cur = canonicalize(st->second);
      step.afterDigest = digest(cur);
      tr.steps.push_back(step);
      continue;
    }
    auto rho = findPermWithReduction(cur);
    if (!rho) break;
    ReductionStep step;
    step.kind = ReductionStep::Kind::Perm;
    step.perm = *rho;
    step.beforeDigest = digest(cur);
    cur = canonicalize(actPerm(*rho, cur));
    step.afterDigest = digest(cur);
    tr.steps.push_back(step);
  }
  tr.minimal = cur;
  // spell the braid word leading from the minimal diagram back to the input
  int n = dIn.n;
  BraidWord w(n, {});
  for (const ReductionStep& s : tr.steps) {
    if (s.kind == ReductionStep::Kind::Sigma)
      w = concat(w, BraidWord(n, {s.gen.inverse()}));
    else
      w = concat(w, permWord(s.perm.inverse(), n));
  }
  tr.extractedWord = w;
  return tr;
}

std::optional<BraidWord> undraw(const Vcd& d) {
  ReductionTrace tr = normalize(d);
  const Vcd& m = tr.minimal;
  for (const auto& ch : m.curves)
    if (ch.size() != 2) return std::nullopt;  // not a permutation image of I_n
  VcdIndex ix = buildIndex(m);
  Perm pi;
  pi.img.resize(m.n);
  for (int k = 0; k < m.n; ++k) pi.img[k] = ix.slotOf.at(m.curves[k].back());
  return concat(tr.extractedWord, permWord(pi, m.n));
}

bool wordsEqual(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw std::invalid_argument("wordsEqual: strand mismatch");
  Vcd in = trivialDiagram(u.strands);
  return actWord(u, in) == actWord(v, in);  // actWord canonicalizes
}

bool isTrivial(const BraidWord& w) { return wordsEqual(w, BraidWord(w.strands, {})); }

}  // namespace vbraid
