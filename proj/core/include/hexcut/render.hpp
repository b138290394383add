// render.hpp — static SVG diagrams of a benzenoid with its cut chords.
#pragma once

#include <optional>
#include <string>

#include "hexcut/boundary.hpp"
#include "hexcut/lattice.hpp"

namespace hexcut {

// Draws the boundary polygon with the elementary cuts of the chosen class
// (all three classes when nullopt) overlaid as chords labeled with their
// multiplicity w'. Output bytes are deterministic for a fixed input.
std::string render_svg(const BoundaryCycle& z, std::optional<EdgeClass> direction);

} // namespace hexcut
