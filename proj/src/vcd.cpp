#include "vbraid/vcd.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vbraid {

ArcKind arcKindAt(int pos) {
  if (pos == 0) return ArcKind::Base;
  return pos % 2 == 1 ? ArcKind::Over : ArcKind::Under;
}

std::pair<ArcKind, bool> arcKind(const Vcd& d, const ArcRef& a) {
  if (a.curve < 0 || a.curve >= d.n) throw std::invalid_argument("arcKind: bad curve");
  const auto& ch = d.curves[a.curve];
  if (a.pos < 0 || a.pos + 1 >= static_cast<int>(ch.size()))
    throw std::invalid_argument("arcKind: arc position out of range");
  return {arcKindAt(a.pos), a.pos + 2 == static_cast<int>(ch.size())};
}

VcdIndex buildIndex(const Vcd& d) {
  VcdIndex ix;
  for (size_t i = 0; i < d.upper.size(); ++i) ix.upos[d.upper[i]] = static_cast<int>(i);
  for (size_t i = 0; i < d.base.size(); ++i) ix.bpos[d.base[i]] = static_cast<int>(i);
  ix.termini.resize(d.n);
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (size_t j = 0; j < ch.size(); ++j) ix.at[ch[j]] = {k, static_cast<int>(j)};
    ix.termini[k] = ch.back();
  }
  ix.slots = ix.termini;
  std::sort(ix.slots.begin(), ix.slots.end(),
            [&](int a, int b) { return ix.upos.at(a) < ix.upos.at(b); });
  for (size_t s = 0; s < ix.slots.size(); ++s) ix.slotOf[ix.slots[s]] = static_cast<int>(s);
  return ix;
}

std::optional<Violation> validate(const Vcd& d) {
  if (d.n != static_cast<int>(d.base.size()) || d.n != static_cast<int>(d.curves.size()))
    return Violation{"counts", "n, |base| and number of curves must agree"};

  std::set<int> up(d.upper.begin(), d.upper.end());
  std::set<int> bs(d.base.begin(), d.base.end());
  if (up.size() != d.upper.size()) return Violation{"points", "duplicate upper point id"};
  if (bs.size() != d.base.size()) return Violation{"points", "duplicate base point id"};
  for (int p : d.upper)
    if (bs.count(p)) return Violation{"points", "id " + std::to_string(p) + " on both lines"};

  std::set<int> seen;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    if (ch.size() < 2)
      return Violation{"curve length", "curve " + std::to_string(k) + " has fewer than 2 points"};
    if (ch[0] != d.base[k])
      return Violation{"curve order", "curve " + std::to_string(k) + " does not start at base[" +
                                          std::to_string(k) + "]"};
    for (size_t j = 1; j < ch.size(); ++j)
      if (!up.count(ch[j]))
        return Violation{"curve points", "non-upper point " + std::to_string(ch[j]) +
                                             " inside curve " + std::to_string(k)};
    for (int p : ch) {
      if (seen.count(p))
        return Violation{"partition", "point " + std::to_string(p) + " on two curves"};
      seen.insert(p);
    }
  }
  if (seen.size() != d.upper.size() + d.base.size())
    return Violation{"partition", "a point belongs to no curve"};

  // over-arc planarity: no interleaving min1 < min2 < max1 < max2
  VcdIndex ix = buildIndex(d);
  struct Span {
    int lo, hi, curve, pos;
  };
  std::vector<Span> overs;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      int a = ix.upos.at(ch[j]), b = ix.upos.at(ch[j + 1]);
      overs.push_back({std::min(a, b), std::max(a, b), k, j});
    }
  }
  std::sort(overs.begin(), overs.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  for (size_t i = 0; i < overs.size(); ++i)
    for (size_t j = i + 1; j < overs.size(); ++j) {
      if (overs[j].lo >= overs[i].hi) break;
      if (overs[j].hi > overs[i].hi)
        return Violation{"over arcs",
                         "over arcs interleave: curve " + std::to_string(overs[i].curve) +
                             " arc " + std::to_string(overs[i].pos) + " and curve " +
                             std::to_string(overs[j].curve) + " arc " +
                             std::to_string(overs[j].pos)};
    }
  return std::nullopt;
}

void requireValid(const Vcd& d, const char* where) {
  if (auto v = validate(d))
    throw std::logic_error(std::string(where) + ": invalid diagram (" + v->clause + ": " +
                           v->detail + ")");
}

Vcd trivialDiagram(int n) {
  if (n < 1) throw std::invalid_argument("trivialDiagram: n must be >= 1");
  Vcd d;
  d.n = n;
  for (int i = 0; i < n; ++i) {
    d.upper.push_back(i);
    d.base.push_back(n + i);
    d.curves.push_back({n + i, i});
  }
  return d;
}

bool encloses(const Vcd& d, const ArcRef& a, int p) {
  auto [kind, term] = arcKind(d, a);
  (void)term;
  if (kind == ArcKind::Base) throw std::invalid_argument("encloses: base arc");
  VcdIndex ix = buildIndex(d);
  if (!ix.isUpper(p)) throw std::invalid_argument("encloses: not an upper point");
  const auto& ch = d.curves[a.curve];
  int x = ix.upos.at(ch[a.pos]), y = ix.upos.at(ch[a.pos + 1]);
  int q = ix.upos.at(p);
  return std::min(x, y) < q && q < std::max(x, y);
}

namespace {

// Span of an arc's upper endpoints; base arcs report their single upper end
// twice on the upper line plus the base index separately.
struct ArcGeom {
  ArcKind kind;
  int uLo = -1, uHi = -1;  // upper indices (for base arcs: the upper end twice)
  int bIdx = -1;           // base index for base arcs
};

ArcGeom geom(const Vcd& d, const VcdIndex& ix, const ArcRef& a) {
  const auto& ch = d.curves[a.curve];
  ArcGeom g;
  g.kind = arcKindAt(a.pos);
  if (g.kind == ArcKind::Base) {
    g.bIdx = ix.bpos.at(ch[0]);
    g.uLo = g.uHi = ix.upos.at(ch[1]);
  } else {
    int x = ix.upos.at(ch[a.pos]), y = ix.upos.at(ch[a.pos + 1]);
    g.uLo = std::min(x, y);
    g.uHi = std::max(x, y);
  }
  return g;
}

bool underUnderCross(const ArcGeom& a, const ArcGeom& b) {
  bool encC = a.uLo < b.uLo && b.uLo < a.uHi;
  bool encD = a.uLo < b.uHi && b.uHi < a.uHi;
  return encC != encD;
}

}  // namespace

bool crosses(const Vcd& d, const ArcRef& a, const ArcRef& b) {
  VcdIndex ix = buildIndex(d);
  ArcGeom ga = geom(d, ix, a), gb = geom(d, ix, b);
  if (ga.kind == ArcKind::Over || gb.kind == ArcKind::Over)
    throw std::invalid_argument("crosses: over arcs never cross");
  if (ga.kind == ArcKind::Under && gb.kind == ArcKind::Under) return underUnderCross(ga, gb);
  if (ga.kind == ArcKind::Under && gb.kind == ArcKind::Base)
    return ga.uLo < gb.uHi && gb.uHi < ga.uHi;
  if (ga.kind == ArcKind::Base && gb.kind == ArcKind::Under)
    return gb.uLo < ga.uHi && ga.uHi < gb.uHi;
  // base/base: (a,b) x (c,d) cross iff a <_P c and d <_P b
  return (ga.bIdx < gb.bIdx && gb.uHi < ga.uHi) || (gb.bIdx < ga.bIdx && ga.uHi < gb.uHi);
}

bool isFreeUnderArc(const Vcd& d, const ArcRef& a) {
  if (arcKind(d, a).first != ArcKind::Under)
    throw std::invalid_argument("isFreeUnderArc: not an under arc");
  VcdIndex ix = buildIndex(d);
  ArcGeom ga = geom(d, ix, a);
  std::vector<std::pair<ArcRef, ArcGeom>> arcs;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 0; j + 1 < static_cast<int>(ch.size()); ++j) {
      ArcRef r{k, j};
      if (arcKindAt(j) == ArcKind::Over) continue;
      if (k == a.curve && j == a.pos) continue;
      arcs.push_back({r, geom(d, ix, r)});
    }
  }
  for (const auto& [r, g] : arcs)
    if (crosses(d, a, r)) return false;
  // enclosed crossing under pairs
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].second.kind != ArcKind::Under) continue;
    if (!(ga.uLo < arcs[i].second.uLo && arcs[i].second.uHi < ga.uHi)) continue;
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[j].second.kind != ArcKind::Under) continue;
      if (!(ga.uLo < arcs[j].second.uLo && arcs[j].second.uHi < ga.uHi)) continue;
      if (underUnderCross(arcs[i].second, arcs[j].second)) return false;
    }
  }
  return true;
}

namespace {

void eraseUpper(Vcd& d, int id) {
  d.upper.erase(std::find(d.upper.begin(), d.upper.end(), id));
}

}  // namespace

Vcd tMove(const Vcd& d, int curve) {
  if (curve < 0 || curve >= d.n) throw std::invalid_argument("tMove: bad curve");
  const auto& ch = d.curves[curve];
  if (ch.size() < 3)
    throw std::invalid_argument("tMove: curve would drop below two points");
  VcdIndex ix = buildIndex(d);
  int a = ch[ch.size() - 2], b = ch.back();
  if (std::abs(ix.upos.at(a) - ix.upos.at(b)) != 1)
    throw std::invalid_argument("tMove: terminal arc endpoints not adjacent");
  Vcd out = d;
  out.curves[curve].pop_back();
  eraseUpper(out, b);
  return out;
}

Vcd bMove(const Vcd& d, int curve, int pos) {
  if (curve < 0 || curve >= d.n) throw std::invalid_argument("bMove: bad curve");
  const auto& ch = d.curves[curve];
  if (pos < 1 || pos + 2 >= static_cast<int>(ch.size()))
    throw std::invalid_argument("bMove: need three consecutive arcs");
  VcdIndex ix = buildIndex(d);
  int b = ch[pos], c = ch[pos + 1];
  if (std::abs(ix.upos.at(b) - ix.upos.at(c)) != 1)
    throw std::invalid_argument("bMove: middle points not adjacent");
  Vcd out = d;
  out.curves[curve].erase(out.curves[curve].begin() + pos, out.curves[curve].begin() + pos + 2);
  eraseUpper(out, b);
  eraseUpper(out, c);
  return out;
}

namespace {

struct Move {
  bool isT;
  int curve;
  int pos;  // for B
};

std::vector<Move> availableMoves(const Vcd& d) {
  std::vector<Move> out;
  VcdIndex ix = buildIndex(d);
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    if (ch.size() >= 3) {
      int a = ch[ch.size() - 2], b = ch.back();
      if (std::abs(ix.upos.at(a) - ix.upos.at(b)) == 1) out.push_back({true, k, 0});
    }
  }
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 2 < static_cast<int>(ch.size()); ++j) {
      if (std::abs(ix.upos.at(ch[j]) - ix.upos.at(ch[j + 1])) == 1) out.push_back({false, k, j});
    }
  }
  return out;
}

}  // namespace

bool isSimplified(const Vcd& d) { return availableMoves(d).empty(); }

Vcd simplifyWithChoice(const Vcd& d, const std::function<size_t(size_t)>& pick) {
  Vcd cur = d;
  for (;;) {
    auto moves = availableMoves(cur);
    if (moves.empty()) return cur;
    const Move& m = moves[pick(moves.size())];
    cur = m.isT ? tMove(cur, m.curve) : bMove(cur, m.curve, m.pos);
  }
}

Vcd simplify(const Vcd& d) {
  return simplifyWithChoice(d, [](size_t) { return 0; });
}

Vcd canonicalize(const Vcd& d) {
  Vcd s = simplify(d);
  std::unordered_map<int, int> rename;
  for (size_t i = 0; i < s.upper.size(); ++i) rename[s.upper[i]] = static_cast<int>(i);
  int ubase = static_cast<int>(s.upper.size());
  for (size_t i = 0; i < s.base.size(); ++i) rename[s.base[i]] = ubase + static_cast<int>(i);
  Vcd out;
  out.n = s.n;
  for (int p : s.upper) out.upper.push_back(rename[p]);
  for (int p : s.base) out.base.push_back(rename[p]);
  out.curves.resize(s.n);
  for (int k = 0; k < s.n; ++k)
    for (int p : s.curves[k]) out.curves[k].push_back(rename[p]);
  return out;
}

bool canonicalEqual(const Vcd& a, const Vcd& b) { return canonicalize(a) == canonicalize(b); }

std::uint64_t digest(const Vcd& d) {
  Vcd c = canonicalize(d);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  };
  mix(c.n);
  for (int p : c.upper) mix(p + 1);
  mix(0xffffffffULL);
  for (const auto& ch : c.curves) {
    for (int p : ch) mix(p + 1);
    mix(0xfffffffeULL);
  }
  return h;
}

std::vector<int> oVector(const Vcd& d) {
  Vcd s = simplify(d);
  VcdIndex ix = buildIndex(s);
  std::vector<int> o(s.n, 0);
  for (int k = 0; k < s.n; ++k) {
    const auto& ch = s.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); j += 2) {
      int x = ix.upos.at(ch[j]), y = ix.upos.at(ch[j + 1]);
      int lo = std::min(x, y), hi = std::max(x, y);
      for (int slot = 0; slot < s.n; ++slot) {
        int tp = ix.upos.at(ix.slots[slot]);
        if (lo < tp && tp < hi) ++o[slot];
      }
    }
  }
  return o;
}

int complexity(const Vcd& d) {
  std::vector<int> o = oVector(d);
  int c = 0;
  for (int v : o) c += v;
  return c;
}

std::vector<TerminalOverArc> terminalOverArcs(const Vcd& d) {
  if (!isSimplified(d)) throw std::logic_error("terminalOverArcs: diagram not simplified");
  VcdIndex ix = buildIndex(d);
  std::vector<TerminalOverArc> out;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    int last = static_cast<int>(ch.size()) - 2;
    if (last < 1 || last % 2 != 1) continue;  // terminal arc not an over arc
    int a = ch[last], t = ch[last + 1];
    int pa = ix.upos.at(a), pt = ix.upos.at(t);
    int slot = ix.slotOf.at(t);  // 0-based
    TerminalOverArc toa;
    toa.arc = ArcRef{k, last};
    if (pa < pt) {
      // terminates at slot+1 (1-based), encloses slot to its left
      toa.leftToRight = true;
      toa.i = slot;  // 1-based i with type (i,i+1): i = slot (0-based slot = i+1-1)
    } else {
      toa.leftToRight = false;
      toa.i = slot + 1;  // type (i+1,i): i = slot+1 in 1-based terms
    }
    out.push_back(toa);
  }
  return out;
}

std::string toJson(const Vcd& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["upper"] = d.upper;
  j["base"] = d.base;
  j["curves"] = d.curves;
  return j.dump();
}

Vcd fromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Vcd d;
  d.n = j.at("n").get<int>();
  d.upper = j.at("upper").get<std::vector<int>>();
  d.base = j.at("base").get<std::vector<int>>();
  d.curves = j.at("curves").get<std::vector<std::vector<int>>>();
  // accept curves in any order; sort by base position
  std::unordered_map<int, int> bpos;
  for (size_t i = 0; i < d.base.size(); ++i) bpos[d.base[i]] = static_cast<int>(i);
  std::sort(d.curves.begin(), d.curves.end(), [&](const auto& a, const auto& b) {
    return bpos.at(a.at(0)) < bpos.at(b.at(0));
  });
  if (auto v = validate(d))
    throw std::invalid_argument("fromJson: invalid diagram (" + v->clause + ": " + v->detail + ")");
  return d;
}

std::string excursionString(const Vcd& d) {
  VcdIndex ix = buildIndex(d);
  // gap index of an upper position: number of punctures strictly to its left
  auto gapOf = [&](int uposIdx) {
    int g = 0;
    for (int s = 0; s < d.n; ++s)
      if (ix.upos.at(ix.slots[s]) < uposIdx) ++g;
    return g;
  };
  std::ostringstream out;
  for (int k = 0; k < d.n; ++k) {
    if (k) out << " | ";
    const auto& ch = d.curves[k];
    out << "curve(b=" << k + 1 << "):";
    for (size_t j = 1; j < ch.size(); ++j) {
      int p = ch[j];
      bool terminal = j + 1 == ch.size();
      out << ' ';
      if (j >= 2) out << (arcKindAt(static_cast<int>(j) - 1) == ArcKind::Over ? '^' : '.');
      else if (terminal) out << '.';  // base arc straight into the puncture
      if (terminal)
        out << 'P' << ix.slotOf.at(p) + 1;
      else
        out << 'g' << gapOf(ix.upos.at(p));
    }
  }
  return out.str();
}

}  // namespace vbraid
