#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/sft.hpp"

namespace polysft {

// Plain-text picture: grids for free abelian rank <= 2, a coords/symbol
// listing for everything else.
std::string render_text(const Configuration& c);

// Binary PGM (P5), gray level floor(255 * index / (|A|-1)), 0 when |A| = 1.
// Supported for free abelian rank <= 2 domains; ball cells outside the
// bounding box render as 0.
std::vector<std::uint8_t> render_pgm(const Configuration& c);

} // namespace polysft
