#pragma once

#include "heffter/construction.hpp"

namespace heffter {

/// Odd-by-odd builders: a corner tile (entries affine in x = mn and
/// y = s + k) plus border tile strips along the top row block and down the
/// left column block, wrapped around a shifted even-by-even interior.

/// m = 4s+1, n = 4k+1, both >= 9. Modular only.
ConstructionResult build_1mod4_1mod4(Entry m, Entry n);

/// m = 4s+3, n = 4k+3, both >= 7. Modular only.
ConstructionResult build_3mod4_3mod4(Entry m, Entry n);

/// m = 4s+1 >= 9, n = 4k+3 >= 7. Integer: every line sum is exactly zero.
ConstructionResult build_1mod4_3mod4(Entry m, Entry n);

}  // namespace heffter
