#ifndef CROSSLAB_SVG_HPP
#define CROSSLAB_SVG_HPP

#include "crosslab/drawing.hpp"

#include <string>

namespace crosslab {

// Standalone SVG document: one path per edge polyline, one labeled circle
// per vertex, and (optionally) one marker per crossing point.  Coordinates
// are fitted to a fixed-width canvas and printed with three decimals, so
// the same drawing always renders byte-identical output.  The picture is
// presentation only; nothing parses it back.
std::string render_svg(const Drawing& d, bool mark_crossings = true);

} // namespace crosslab

#endif
