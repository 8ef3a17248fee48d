#include "vbraid/action.hpp"

#include <algorithm>
#include <unordered_set>
#include <sstream>
#include <stdexcept>

namespace vbraid {

namespace {

int maxPointId(const Vcd& d) {
  int m = -1;
  for (int p : d.upper) m = std::max(m, p);
  for (int p : d.base) m = std::max(m, p);
  return m;
}

std::unordered_map<int, int> upperPos(const Vcd& d) {
  std::unordered_map<int, int> up;
  up.reserve(d.upper.size() * 2);
  for (size_t i = 0; i < d.upper.size(); ++i) up[d.upper[i]] = static_cast<int>(i);
  return up;
}

void insertBefore(Vcd& d, int anchor, int id) {
  auto it = std::find(d.upper.begin(), d.upper.end(), anchor);
  d.upper.insert(it, id);
}

void insertAfter(Vcd& d, int anchor, int id) {
  auto it = std::find(d.upper.begin(), d.upper.end(), anchor);
  d.upper.insert(it + 1, id);
}

void eraseUpperPoint(Vcd& d, int id) {
  d.upper.erase(std::find(d.upper.begin(), d.upper.end(), id));
}

// --- sigma^{+1}: the mover at slot i hops rightward over slot i+1 ---
//
// The mover's terminus leaves a crossing behind and a new terminal over arc
// (the barrier) is drawn from there to a fresh puncture just right of the
// jumped terminal point. Over arcs with exactly one endpoint under the
// barrier cannot stay planar; they are rerouted through a dive at the
// landing corridor: the portion outside keeps its foot, the portion inside
// keeps its foot, and the two fresh crossings hug the new puncture.
Vcd sigmaPlus(const Vcd& dIn, int i) {
  Vcd d = simplify(dIn);
  VcdIndex ix = buildIndex(d);
  int J = ix.slots[i], K = ix.slots[i + 1];
  int curveA = ix.at.at(J).first;
  int nextId = maxPointId(d) + 1;

  // A mover approached from above first retracts onto a from-below terminus
  // (an inverse T-move), so the hop always starts with an over arc.
  {
    const auto& chA = d.curves[curveA];
    int lastArc = static_cast<int>(chA.size()) - 2;
    if (arcKindAt(lastArc) == ArcKind::Over) {
      int J2 = nextId++;
      insertAfter(d, J, J2);
      d.curves[curveA].push_back(J2);
      J = J2;
    }
  }

  int w = J;  // becomes an ordinary crossing
  int z = nextId++;
  insertAfter(d, K, z);

  auto up = upperPos(d);
  const int pw = up.at(w), pz = up.at(z);
  auto inside = [&](int id) {
    int p = up.at(id);
    return pw < p && p < pz;
  };

  struct Conf {
    int curve, pos;
    int inId, outId;
    bool outLeft;
    int c1 = -1, c2 = -1;
  };
  std::vector<Conf> confs;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      int u = ch[j], v = ch[j + 1];
      bool iu = inside(u), iv = inside(v);
      if (iu == iv) continue;
      Conf c;
      c.curve = k;
      c.pos = j;
      c.inId = iu ? u : v;
      c.outId = iu ? v : u;
      c.outLeft = up.at(c.outId) < pw;
      confs.push_back(c);
    }
  }

  // Dive crossings just left of z: the arc with the leftmost inside endpoint
  // dives closest to the landing.
  {
    std::vector<Conf*> order;
    for (auto& c : confs) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [&](Conf* a, Conf* b) { return up.at(a->inId) > up.at(b->inId); });
    for (Conf* c : order) {
      c->c2 = nextId++;
      insertBefore(d, z, c->c2);
    }
  }
  // Resurfacing crossings just right of z: arcs escaping over the barrier
  // hug the landing, then the right-side stubs, outermost nearest.
  {
    std::vector<Conf*> ls, rs;
    for (auto& c : confs) (c.outLeft ? ls : rs).push_back(&c);
    auto byOut = [&](Conf* a, Conf* b) { return up.at(a->outId) < up.at(b->outId); };
    std::sort(ls.begin(), ls.end(), byOut);
    std::sort(rs.begin(), rs.end(), byOut);
    for (Conf* c : rs) {
      c->c1 = nextId++;
      insertAfter(d, z, c->c1);
    }
    for (Conf* c : ls) {
      c->c1 = nextId++;
      insertAfter(d, z, c->c1);
    }
  }

  std::sort(confs.begin(), confs.end(), [](const Conf& a, const Conf& b) {
    return a.curve != b.curve ? a.curve < b.curve : a.pos > b.pos;
  });
  for (const Conf& c : confs) {
    auto& ch = d.curves[c.curve];
    bool startsInside = ch[c.pos] == c.inId;
    std::vector<int> mid = startsInside ? std::vector<int>{c.c2, c.c1}
                                        : std::vector<int>{c.c1, c.c2};
    ch.insert(ch.begin() + c.pos + 1, mid.begin(), mid.end());
  }

  d.curves[curveA].push_back(z);
  requireValid(d, "sigma action");
  return simplify(d);
}

// --- tau: the two punctures swap places around the pinned points between ---
//
// Over arcs whose covered punctures separate are redrawn: one over-run per
// block of covered punctures that stays contiguous, joined below the line,
// with fresh feet placed by walking outward past the feet of arcs that were
// nested inside (so towers keep their nesting and unmoved regions keep
// their shape). A transported terminus is approached from below.
Vcd tauAct(const Vcd& dIn, int i) {
  Vcd d = simplify(dIn);
  VcdIndex ix = buildIndex(d);
  const int J = ix.slots[i], K = ix.slots[i + 1];
  int nextId = maxPointId(d) + 1;

  auto up0 = upperPos(d);  // original positions

  // current over-arc partner of every over-arc endpoint
  std::unordered_map<int, int> partnerOf;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      partnerOf[ch[j]] = ch[j + 1];
      partnerOf[ch[j + 1]] = ch[j];
    }
  }

  // new slot of each puncture after the swap
  std::unordered_map<int, int> slotNew;
  for (int s = 0; s < d.n; ++s) slotNew[ix.slots[s]] = s;
  slotNew[J] = i + 1;
  slotNew[K] = i;

  struct Aff {
    int curve;
    int uId, vId;              // arc endpoints in traversal order
    std::vector<int> covered;  // puncture ids in traversal order
    bool terminal;
    int width;
  };
  std::vector<Aff> affs;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      int u = ch[j], v = ch[j + 1];
      int pu = up0.at(u), pv = up0.at(v);
      int lo = std::min(pu, pv), hi = std::max(pu, pv);
      std::vector<int> cov;
      for (int s = 0; s < d.n; ++s) {
        int pt = up0.at(ix.slots[s]);
        if (lo < pt && pt < hi) cov.push_back(ix.slots[s]);
      }
      bool coversJ = std::find(cov.begin(), cov.end(), J) != cov.end();
      bool coversK = std::find(cov.begin(), cov.end(), K) != cov.end();
      bool terminal = j + 2 == static_cast<int>(ch.size());
      bool moverTerminal = terminal && (ch.back() == J || ch.back() == K);
      if (!coversJ && !coversK && !moverTerminal) continue;
      if (pu > pv) std::reverse(cov.begin(), cov.end());
      affs.push_back({k, u, v, cov, terminal, hi - lo});
    }
  }

  // the swap itself
  {
    int pJ = up0.at(J), pK = up0.at(K);
    std::swap(d.upper[pJ], d.upper[pK]);
  }

  std::sort(affs.begin(), affs.end(), [](const Aff& a, const Aff& b) { return a.width > b.width; });

  std::unordered_set<int> termini;
  for (int k = 0; k < d.n; ++k) termini.insert(d.curves[k].back());

  // Fresh foot next to puncture p: walk outward past feet of arcs that were
  // strictly nested inside `outer`, stop at punctures and everything else.
  auto placeFoot = [&](int p, int side, const Span& outer) {
    auto it = std::find(d.upper.begin(), d.upper.end(), p);
    for (;;) {
      auto probe = it;
      if (side < 0) {
        if (probe == d.upper.begin()) break;
        --probe;
      } else {
        ++probe;
        if (probe == d.upper.end()) break;
      }
      if (termini.count(*probe)) break;  // never cross a puncture
      auto sp = spanOf.find(*probe);
      if (sp == spanOf.end()) break;
      if (!(sp->second.lo > outer.lo && sp->second.hi < outer.hi)) break;
      it = probe;
    }
    int id = nextId++;
    d.upper.insert(side < 0 ? it : it + 1, id);
    return id;
  };

  for (const Aff& af : affs) {
    auto& ch = d.curves[af.curve];
    auto itU = std::find(ch.begin(), ch.end(), af.uId);
    int pos = static_cast<int>(itU - ch.begin());

    // drop the old feet first so the scans never see them
    if (af.terminal) {
      eraseUpperPoint(d, af.uId);
      ch.erase(ch.begin() + pos);
    } else {
      eraseUpperPoint(d, af.uId);
      eraseUpperPoint(d, af.vId);
      ch.erase(ch.begin() + pos, ch.begin() + pos + 2);
    }

    // runs inherit the arc's traversal direction
    bool ascending = up0.at(af.uId) < up0.at(af.vId);

    // maximal runs of covered punctures consecutive in the new slot order
    std::vector<std::vector<int>> runs;
    for (int t : af.covered) {
      if (!runs.empty()) {
        int prev = slotNew.at(runs.back().back());
        int cur = slotNew.at(t);
        if (cur - prev == (ascending ? 1 : -1)) {
          runs.back().push_back(t);
          continue;
        }
      }
      runs.push_back({t});
    }

    std::vector<int> repl;
    for (const auto& r : runs) {
      int first = r.front(), last = r.back();
      int f, g;
      if (ascending) {
        f = placeFoot(first, -1, af.span);
        g = placeFoot(last, +1, af.span);
      } else {
        f = placeFoot(first, +1, af.span);
        g = placeFoot(last, -1, af.span);
      }
      spanOf[f] = af.span;
      spanOf[g] = af.span;
      repl.push_back(f);
      repl.push_back(g);
    }
    ch.insert(ch.begin() + pos, repl.begin(), repl.end());
  }

  requireValid(d, "tau action");
  return simplify(d);
}

}  // namespace

Vcd mirrorVcd(const Vcd& d) {
  Vcd m = d;
  std::reverse(m.upper.begin(), m.upper.end());
  std::reverse(m.base.begin(), m.base.end());
  std::reverse(m.curves.begin(), m.curves.end());
  return m;
}

Vcd actGenerator(const BGen& g, const Vcd& d) {
  if (g.index < 1 || g.index > d.n - 1)
    throw std::invalid_argument("actGenerator: generator index out of range");
  int i = g.index - 1;  // 0-based slot
  if (g.kind == BKind::Tau) return tauAct(d, i);
  if (g.sign > 0) return sigmaPlus(d, i);
  // sigma_i^{-1} is the mirror image of sigma_{n-i}
  return mirrorVcd(sigmaPlus(mirrorVcd(d), d.n - 2 - i));
}

Vcd actWord(const BraidWord& w, const Vcd& d) {
  if (w.strands != d.n) throw std::invalid_argument("actWord: strand count mismatch");
  Vcd cur = canonicalize(d);
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
    cur = canonicalize(actGenerator(*it, cur));
  return cur;
}

Vcd actPerm(const Perm& p, const Vcd& d) {
  if (p.size() != d.n) throw std::invalid_argument("actPerm: size mismatch");
  return actWord(permWord(p, d.n), d);
}

BraidWord topBraid(const Vcd& dIn) {
  if (!isSimplified(dIn)) throw std::logic_error("topBraid: diagram not simplified");
  Vcd cur = dIn;
  std::vector<BGen> applied;
  for (;;) {
    auto toas = terminalOverArcs(cur);
    if (toas.empty()) break;
    VcdIndex ix = buildIndex(cur);
    const TerminalOverArc* best = nullptr;
    int bestPos = -1;
    for (const auto& t : toas) {
      int term = cur.curves[t.arc.curve].back();
      int pos = ix.upos.at(term);
      if (!best || pos < bestPos) {
        best = &t;
        bestPos = pos;
      }
    }
    BGen g = best->leftToRight ? BGen::sigma(best->i, -1) : BGen::sigma(best->i, +1);
    cur = canonicalize(actGenerator(g, cur));
    applied.push_back(g);
    if (applied.size() > 10000) throw std::logic_error("topBraid: failed to terminate");
  }
  std::vector<BGen> beta;
  for (const BGen& g : applied) beta.push_back(g.inverse());
  return BraidWord(dIn.n, std::move(beta));
}

Coordinates coordinates(const Vcd& dIn) {
  Vcd d = canonicalize(dIn);
  VcdIndex ix = buildIndex(d);
  Coordinates out;
  out.perm.img.resize(d.n);
  for (int k = 0; k < d.n; ++k) out.perm.img[k] = ix.slotOf.at(d.curves[k].back());
  for (int k = 0; k < d.n; ++k) {
    std::vector<FGen> letters;
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      int pu = ix.upos.at(ch[j]), pv = ix.upos.at(ch[j + 1]);
      bool ltr = pu < pv;
      int lo = std::min(pu, pv), hi = std::max(pu, pv);
      std::vector<int> passed;
      for (int s = 0; s < d.n; ++s) {
        int pt = ix.upos.at(ix.slots[s]);
        if (lo < pt && pt < hi) passed.push_back(s);
      }
      if (!ltr) std::reverse(passed.begin(), passed.end());
      for (int s : passed) letters.push_back(FGen{s + 1, ltr ? +1 : -1});
    }
    GroupWord u = GroupWord::fromLetters(d.n, false, letters);
    out.reps.push_back(cosetNormalize(u, out.perm.img[k] + 1));
  }
  return out;
}

std::string formatCoordinates(const Coordinates& c) {
  std::ostringstream out;
  out << '(';
  for (size_t k = 0; k < c.reps.size(); ++k) {
    if (k) out << ", ";
    std::string u = formatGroupWord(c.reps[k]);
    if (!u.empty()) out << u << ' ';
    out << "<x" << c.perm.img[k] + 1 << '>';
  }
  out << ')';
  return out.str();
}

}  // namespace vbraid
