#include "vbraid/reps.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbraid {

namespace {

GroupWord gw(int rank, bool q, std::initializer_list<FGen> ls) {
  return GroupWord::fromLetters(rank, q, std::vector<FGen>(ls));
}

}  // namespace

FreeEndo generatorEndo(RepKind kind, const BGen& g, int n) {
  if (g.index < 1 || g.index > n - 1)
    throw std::invalid_argument("generatorEndo: index out of range");
  bool hasQ = kind == RepKind::BmPsi;
  FreeEndo f(n, hasQ);
  int i = g.index;
  if (g.kind == BKind::Sigma) {
    if (g.sign > 0) {
      f.setImage(i, gw(n, hasQ, {{i, +1}, {i + 1, +1}, {i, -1}}));
      f.setImage(i + 1, gw(n, hasQ, {{i, +1}}));
    } else {
      f.setImage(i, gw(n, hasQ, {{i + 1, +1}}));
      f.setImage(i + 1, gw(n, hasQ, {{i + 1, -1}, {i, +1}, {i + 1, +1}}));
    }
    return f;
  }
  switch (kind) {
    case RepKind::ArtinPhi:
      throw std::invalid_argument("the Artin representation takes no tau generators");
    case RepKind::WeldedPsi:
      f.setImage(i, gw(n, hasQ, {{i + 1, +1}}));
      f.setImage(i + 1, gw(n, hasQ, {{i, +1}}));
      return f;
    case RepKind::BmPsi:
      f.setImage(i, gw(n, hasQ, {{0, +1}, {i + 1, +1}, {0, -1}}));
      f.setImage(i + 1, gw(n, hasQ, {{0, -1}, {i, +1}, {0, +1}}));
      return f;
  }
  throw std::logic_error("generatorEndo: unreachable");
}

FreeEndo wordEndo(RepKind kind, const BraidWord& w) {
  FreeEndo acc(w.strands, kind == RepKind::BmPsi);
  for (const BGen& g : w.gens) acc = composeEndo(acc, generatorEndo(kind, g, w.strands));
  return acc;
}

bool isKernelElement(RepKind kind, const BraidWord& w) { return wordEndo(kind, w).isIdentity(); }

std::optional<Coordinates> endoCoordinates(const FreeEndo& f) {
  Coordinates out;
  out.perm.img.resize(f.rank());
  for (int j = 1; j <= f.rank(); ++j) {
    std::vector<FGen> u;
    std::vector<FGen> im = f.image(j).letters();
    while (im.size() > 1) {
      FGen first = im.front(), last = im.back();
      if (first.index != last.index || first.sign != -last.sign) return std::nullopt;
      u.push_back(first);
      im.erase(im.begin());
      im.pop_back();
    }
    if (im.size() != 1 || im[0].sign != +1 || im[0].index == 0) return std::nullopt;
    out.perm.img[j - 1] = im[0].index - 1;
    GroupWord uw = GroupWord::fromLetters(f.rank(), f.hasQ(), u);
    out.reps.push_back(cosetNormalize(uw, im[0].index));
  }
  return out;
}

// ---------------------------------------------------------------------------
// psiFromVcd: a fixed drawing with exact rational crossings.
//
// Upper point at index i sits at x = i+1 on the upper line (y = 0). Base
// point k sits at (k+1, -R). Base arcs are straight segments; under arcs are
// tents through ((x1+x2)/2, -(x2-x1)/2), whose sides have slopes +-1, so
// every curve-curve crossing below the line is a segment intersection with
// rational coordinates. Over arcs live above the line and cross nothing.
// ---------------------------------------------------------------------------

namespace {

struct Rat {
  long long n = 0, d = 1;  // d > 0
  Rat() = default;
  Rat(long long v) : n(v), d(1) {}
  Rat(long long nn, long long dd) : n(nn), d(dd) {
    if (d < 0) { n = -n; d = -d; }
  }
};

Rat sub(const Rat& a, const Rat& b) { return Rat(a.n * b.d - b.n * a.d, a.d * b.d); }
bool less(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.n) * b.d < static_cast<__int128>(b.n) * a.d;
}

struct Pt {
  Rat x, y;
};

struct Seg {
  Pt a, b;  // travel a -> b
};

// Proper intersection of open segments; endpoints touching is treated as no
// crossing (the shared junction points of one curve).
std::optional<Pt> segCross(const Seg& s, const Seg& t) {
  auto cross = [](const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) -> __int128 {
    // sign of ax*by - ay*bx over positive denominators
    __int128 lhs = static_cast<__int128>(ax.n) * ay.d * by.n * bx.d;
    __int128 rhs = static_cast<__int128>(ay.n) * ax.d * bx.n * by.d;
    return lhs - rhs;
  };
  Rat rx = sub(s.b.x, s.a.x), ry = sub(s.b.y, s.a.y);
  Rat qx = sub(t.b.x, t.a.x), qy = sub(t.b.y, t.a.y);
  Rat dx = sub(t.a.x, s.a.x), dy = sub(t.a.y, s.a.y);
  __int128 denom = cross(rx, ry, qx, qy);
  if (denom == 0) return std::nullopt;
  // u = cross(d, q)/denom along s; v = cross(d, r)/denom along t
  __int128 uNum = cross(dx, dy, qx, qy);
  __int128 vNum = cross(dx, dy, rx, ry);
  auto strictlyInside = [&](__int128 num) {
    if (denom > 0) return num > 0 && num < denom;
    return num < 0 && num > denom;
  };
  if (!strictlyInside(uNum) || !strictlyInside(vNum)) return std::nullopt;
  // intersection point: s.a + (uNum/denom) * r  -- keep exact rationals
  long long un = static_cast<long long>(uNum), de = static_cast<long long>(denom);
  Rat px(s.a.x.n * de * rx.d + rx.n * un * s.a.x.d, s.a.x.d * de * rx.d);
  Rat py(s.a.y.n * de * ry.d + ry.n * un * s.a.y.d, s.a.y.d * de * ry.d);
  return Pt{px, py};
}

struct Piece {
  int curve;
  int arcPos;     // arc index along the curve
  int segIdx;     // 0 or 1 within the arc
  Seg seg;
};

struct QLetter {
  Rat t;      // position along the arc's travel (x-parameter based)
  int sign;
};

}  // namespace

FreeEndo psiFromVcd(const Vcd& dIn) {
  Vcd d = canonicalize(dIn);
  VcdIndex ix = buildIndex(d);
  const int n = d.n;
  const long long R = static_cast<long long>(d.upper.size()) + 2;

  auto ux = [&](int id) { return Rat(ix.upos.at(id) + 1); };

  std::vector<Piece> pieces;
  for (int k = 0; k < n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 0; j + 1 < static_cast<int>(ch.size()); ++j) {
      ArcKind kind = arcKindAt(j);
      if (kind == ArcKind::Over) continue;
      if (kind == ArcKind::Base) {
        Pt a{Rat(ix.bpos.at(ch[0]) + 1), Rat(-R)};
        Pt b{ux(ch[1]), Rat(0)};
        pieces.push_back({k, j, 0, Seg{a, b}});
      } else {
        Rat x1 = ux(ch[j]), x2 = ux(ch[j + 1]);
        Rat mx((x1.n * x2.d + x2.n * x1.d), 2 * x1.d * x2.d);
        long long spread = x2.n * x1.d - x1.n * x2.d;  // (x2-x1) numerator
        Rat my(-(spread < 0 ? -spread : spread), 2 * x1.d * x2.d);
        Pt a{x1, Rat(0)}, m{mx, my}, b{x2, Rat(0)};
        pieces.push_back({k, j, 0, Seg{a, m}});
        pieces.push_back({k, j, 1, Seg{m, b}});
      }
    }
  }

  // crossings between pieces of different curves
  std::vector<std::vector<std::vector<QLetter>>> qs(n);  // per curve, per arc slot
  for (int k = 0; k < n; ++k) qs[k].resize(d.curves[k].size());
  auto travelParam = [&](const Piece& p, const Pt& at) {
    // base arcs are monotone in y (upward); tent halves are monotone in x
    if (arcKindAt(p.arcPos) == ArcKind::Base) return at.y;
    Rat prog = sub(at.x, p.seg.a.x);
    if (less(p.seg.b.x, p.seg.a.x)) return Rat(-prog.n, prog.d);
    return prog;
  };
  for (size_t a = 0; a < pieces.size(); ++a) {
    for (size_t b = a + 1; b < pieces.size(); ++b) {
      const Piece &P = pieces[a], &Q = pieces[b];
      if (P.curve == Q.curve) continue;
      auto hit = segCross(P.seg, Q.seg);
      if (!hit) continue;
      // orientation: positive cross(dirP, dirQ) reads q for P
      Rat px = sub(P.seg.b.x, P.seg.a.x), py = sub(P.seg.b.y, P.seg.a.y);
      Rat qx = sub(Q.seg.b.x, Q.seg.a.x), qy = sub(Q.seg.b.y, Q.seg.a.y);
      __int128 cr = static_cast<__int128>(px.n) * py.d * qy.n * qx.d -
                    static_cast<__int128>(py.n) * px.d * qx.n * qy.d;
      int sp = cr > 0 ? +1 : -1;
      // piece-local offset: segIdx 1 of a tent comes after segIdx 0
      auto push = [&](const Piece& pc, int sign, const Pt& at) {
        Rat t = travelParam(pc, at);
        if (pc.segIdx == 1) t = Rat(t.n + t.d * 4 * R, t.d);
        qs[pc.curve][pc.arcPos].push_back({t, sign});
      };
      push(P, sp, *hit);
      push(Q, -sp, *hit);
    }
  }

  FreeEndo out(n, true);
  for (int k = 0; k < n; ++k) {
    const auto& ch = d.curves[k];
    std::vector<FGen> u;
    for (int j = 0; j + 1 < static_cast<int>(ch.size()); ++j) {
      ArcKind kind = arcKindAt(j);
      if (kind == ArcKind::Over) {
        int pu = ix.upos.at(ch[j]), pv = ix.upos.at(ch[j + 1]);
        bool ltr = pu < pv;
        int lo = std::min(pu, pv), hi = std::max(pu, pv);
        std::vector<int> passed;
        for (int s = 0; s < n; ++s) {
          int pt = ix.upos.at(ix.slots[s]);
          if (lo < pt && pt < hi) passed.push_back(s);
        }
        if (!ltr) std::reverse(passed.begin(), passed.end());
        for (int s : passed) u.push_back(FGen{s + 1, ltr ? +1 : -1});
      } else {
        auto& letters = qs[k][j];
        std::stable_sort(letters.begin(), letters.end(),
                         [](const QLetter& a, const QLetter& b) { return less(a.t, b.t); });
        for (const QLetter& q : letters) u.push_back(FGen{0, q.sign});
      }
    }
    GroupWord U = GroupWord::fromLetters(n, true, u);
    int m = ix.slotOf.at(ch.back()) + 1;
    GroupWord mid = GroupWord::fromLetters(n, true, {FGen{m, +1}});
    out.setImage(k + 1, multiply(multiply(U, mid), invert(U)));
  }
  return out;
}

}  // namespace vbraid
