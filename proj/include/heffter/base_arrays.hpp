#pragma once

#include "heffter/grid.hpp"

namespace heffter::base {

// Smallest cases, used verbatim.
const Grid& h3x3();
const Grid& h3x4();

// Shiftable seeds for the even-by-even tiling.
const Grid& h4x4();
const Grid& h4x6();
const Grid& h6x6();

// Sporadic five-row cases.
const Grid& h5x4();
const Grid& h5x5();
const Grid& h5x6();

}  // namespace heffter::base
