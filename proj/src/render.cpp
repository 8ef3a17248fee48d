#include "vbraid/render.hpp"

#include <algorithm>
#include <sstream>

namespace vbraid {

namespace {

struct ArcSpans {
  // nesting depth per over/under arc, computed from span containment
  struct Entry {
    int curve, pos, lo, hi, depth;
    bool over;
  };
  std::vector<Entry> arcs;
};

ArcSpans collectArcs(const Vcd& d, const VcdIndex& ix) {
  ArcSpans out;
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (int j = 1; j + 1 < static_cast<int>(ch.size()); ++j) {
      int a = ix.upos.at(ch[j]), b = ix.upos.at(ch[j + 1]);
      out.arcs.push_back({k, j, std::min(a, b), std::max(a, b), 0,
                          arcKindAt(j) == ArcKind::Over});
    }
  }
  for (auto& e : out.arcs) {
    for (const auto& f : out.arcs) {
      if (&e == &f || e.over != f.over) continue;
      if (f.lo <= e.lo && e.hi <= f.hi && (f.lo < e.lo || e.hi < f.hi)) ++e.depth;
    }
  }
  return out;
}

}  // namespace

std::string toSvg(const Vcd& dIn, const RenderOptions& opts) {
  Vcd d = canonicalize(dIn);
  VcdIndex ix = buildIndex(d);
  const int U = static_cast<int>(d.upper.size());
  const int unit = opts.unit, margin = opts.margin;
  auto X = [&](int uposIdx) { return margin + unit * (uposIdx + 1); };
  ArcSpans arcs = collectArcs(d, ix);
  int maxOver = 0, maxUnder = 0;
  for (const auto& e : arcs.arcs) (e.over ? maxOver : maxUnder) = std::max(e.over ? maxOver : maxUnder, e.depth + 1);
  const int upperY = margin + 20 * maxOver + 24;
  const int baseY = upperY + 20 * maxUnder + 70;
  const int width = margin * 2 + unit * (U + 1);
  const int height = baseY + margin;
  auto BX = [&](int bIdx) { return margin + unit * (bIdx + 1); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << upperY << "\" x2=\"" << width - margin
    << "\" y2=\"" << upperY << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << baseY << "\" x2=\"" << width - margin
    << "\" y2=\"" << baseY << "\" stroke=\"black\"/>\n";

  // base arcs
  for (int k = 0; k < d.n; ++k) {
    int u = ix.upos.at(d.curves[k][1]);
    s << "<line x1=\"" << BX(k) << "\" y1=\"" << baseY << "\" x2=\"" << X(u) << "\" y2=\""
      << upperY << "\" stroke=\"black\"/>\n";
  }
  // over and under arcs as elliptical paths
  for (const auto& e : arcs.arcs) {
    int x1 = X(e.lo), x2 = X(e.hi);
    int ry = 14 + 18 * e.depth;
    int sweep = e.over ? 1 : 0;
    s << "<path d=\"M " << x1 << ' ' << upperY << " A " << (x2 - x1) / 2 << ' ' << ry << " 0 0 "
      << sweep << ' ' << x2 << ' ' << upperY << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  // dots on base points and terminal points
  for (int k = 0; k < d.n; ++k) {
    s << "<circle cx=\"" << BX(k) << "\" cy=\"" << baseY << "\" r=\"4\"/>\n";
    int t = ix.upos.at(d.curves[k].back());
    s << "<circle cx=\"" << X(t) << "\" cy=\"" << upperY << "\" r=\"4\"/>\n";
  }
  // small ticks for ordinary crossings
  for (int k = 0; k < d.n; ++k) {
    const auto& ch = d.curves[k];
    for (size_t j = 1; j + 1 < ch.size(); ++j) {
      int x = X(ix.upos.at(ch[j]));
      s << "<line x1=\"" << x << "\" y1=\"" << upperY - 3 << "\" x2=\"" << x << "\" y2=\""
        << upperY + 3 << "\" stroke=\"black\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

std::string toAscii(const Vcd& dIn) {
  Vcd d = canonicalize(dIn);
  VcdIndex ix = buildIndex(d);
  const int U = static_cast<int>(d.upper.size());
  const int colw = 3;
  const int W = colw * (U + 1) + 1;
  ArcSpans arcs = collectArcs(d, ix);
  int maxOver = 0, maxUnder = 0;
  for (const auto& e : arcs.arcs) {
    if (e.over) maxOver = std::max(maxOver, e.depth + 1);
    else maxUnder = std::max(maxUnder, e.depth + 1);
  }
  std::vector<std::string> grid(maxOver + maxUnder + 3, std::string(W, ' '));
  const int upperRow = maxOver;
  auto col = [&](int uposIdx) { return colw * (uposIdx + 1); };
  // dashed upper line
  for (int x = 0; x < W; ++x) grid[upperRow][x] = x % 2 ? ' ' : '-';
  // arcs: over above, under below, drawn at their nesting depth
  for (const auto& e : arcs.arcs) {
    int row = e.over ? upperRow - 1 - e.depth : upperRow + 1 + e.depth;
    if (row < 0) row = 0;
    if (row >= static_cast<int>(grid.size())) row = static_cast<int>(grid.size()) - 1;
    int c1 = col(e.lo), c2 = col(e.hi);
    for (int x = c1; x <= c2; ++x) grid[row][x] = e.over ? '_' : '~';
  }
  // upper point markers
  for (int i = 0; i < U; ++i) {
    int id = d.upper[i];
    bool term = ix.slotOf.count(id) != 0;
    grid[upperRow][col(i)] = term ? 'O' : '+';
  }
  // base line and base points
  std::string& baseRow = grid.back();
  for (int x = 0; x < W; ++x) baseRow[x] = '_';
  for (int k = 0; k < d.n; ++k) baseRow[col(ix.upos.at(d.curves[k][1]))] = 'o';

  std::ostringstream out;
  for (const auto& row : grid) out << row << '\n';
  out << '\n';
  // faithful footer: role of each upper point, left to right
  out << "upper:";
  for (int i = 0; i < U; ++i) {
    int id = d.upper[i];
    auto [k, pos] = ix.at.at(id);
    out << " c" << k + 1 << '.' << pos;
    if (ix.slotOf.count(id)) out << "=P" << ix.slotOf.at(id) + 1;
  }
  out << '\n';
  out << excursionString(d) << '\n';
  return out.str();
}

}  // namespace vbraid
