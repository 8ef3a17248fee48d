#pragma once

#include <string>

#include "vbraid/vcd.hpp"

namespace vbraid {

struct RenderOptions {
  int unit = 36;      // horizontal spacing between upper points
  int margin = 30;
};

// Deterministic SVG of the canonical diagram: dashed upper line, solid base
// line, over arcs above, under and base arcs below, big dots on base and
// terminal points.
std::string toSvg(const Vcd& d, const RenderOptions& opts = {});

// A monospace sketch plus a faithful footer (upper-point roles and the
// per-curve excursion notation); canonicalizes first, so equal diagrams
// render identically.
std::string toAscii(const Vcd& d);

}  // namespace vbraid
