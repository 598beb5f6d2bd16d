#pragma once

#include "heffter/construction.hpp"
#include "heffter/tile.hpp"

namespace heffter {

/// The three shiftable seed tiles, with all line sums zero and supports
/// {1..16}, {1..24}, {1..36}.
const Tile& base_4x4();
const Tile& base_4x6();
const Tile& base_6x6();

/// Shiftable integer array for any even m, n >= 4, tiled from the three seed
/// tiles with shifts accumulated left-to-right then top-to-bottom, so tile
/// supports partition {1..mn} into consecutive blocks.
ConstructionResult build_even(Entry m, Entry n);

}  // namespace heffter
