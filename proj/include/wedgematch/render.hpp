#pragma once

#include <string>

#include "wedgematch/matching.hpp"
#include "wedgematch/path.hpp"

namespace wedgematch {

inline constexpr const char* kSvgFormatVersion = "wedgematch-svg 1";

// Arc diagram: one text row per arc level above a row of vertex labels.
// Arcs that overlap always sit on different levels; a lower arc never
// passes over the vertical stem of a higher one.
std::string render_ascii(const Matching& m);

// Lattice picture with the wedge boundary drawn as '/' and '\'.
std::string render_ascii(const WedgePath& p);

// SVG 1.1 documents; the format version is embedded as a comment.
std::string render_svg(const Matching& m);
std::string render_svg(const WedgePath& p);

} // namespace wedgematch
