#pragma once

#include "heffter/construction.hpp"

namespace heffter {

/// Integer H(m, n) for odd m >= 3 and n = 0 (mod 4): a 3-row or 5-row strip
/// on top of a shifted even-by-even shiftable block (empty for m = 3, 5).
ConstructionResult build_odd_0mod4(Entry m, Entry n);

/// Modular H(m, n) for odd m >= 7 and n = 2 (mod 4), n >= 6: a variable
/// corner tile evaluated at x = mn plus its family tiles across the top
/// rows, over a shifted even-by-even block (m = 3, 5 route through the
/// strip builders instead).
ConstructionResult build_odd_2mod4(Entry m, Entry n);

}  // namespace heffter
