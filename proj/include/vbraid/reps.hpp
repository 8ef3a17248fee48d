#pragma once

#include <optional>

#include "vbraid/action.hpp"
#include "vbraid/braid.hpp"
#include "vbraid/freegroup.hpp"
#include "vbraid/vcd.hpp"

namespace vbraid {

// ArtinPhi: sigma-only on F_n. WeldedPsi: the naive extension to VB_n on
// F_n. BmPsi: the extension to Aut(F_{n+1}) with the extra generator q.
enum class RepKind { ArtinPhi, WeldedPsi, BmPsi };

FreeEndo generatorEndo(RepKind kind, const BGen& g, int n);
FreeEndo wordEndo(RepKind kind, const BraidWord& w);
bool isKernelElement(RepKind kind, const BraidWord& w);

// Peels each image U x_m^{+1} U^{-1} into the coset vector (U<x_m>, ...).
// Fails (nullopt) when an image is not a positive conjugate of a generator.
// For BmPsi the q letters stay inside the representatives.
std::optional<Coordinates> endoCoordinates(const FreeEndo& f);

// Reads the Bardakov-Manturov images directly off a drawing of the diagram:
// q^{+-1} per crossing with another curve below the upper line, x_j^{+-1}
// per passage over the j-th terminal point. Exact for diagrams in the orbit
// of I_n; best effort elsewhere.
FreeEndo psiFromVcd(const Vcd& d);

}  // namespace vbraid
