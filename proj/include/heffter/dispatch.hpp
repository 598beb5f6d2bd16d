#pragma once

#include "heffter/construction.hpp"

namespace heffter {

/// Build an H(m, n) for any m, n >= 3. Routing, in priority order: both even;
/// a side of 3; a side of 5; one odd side (normalized to rows, split on
/// n mod 4); both odd (normalized by transposition to the matching corner
/// case). The claimed class is integer exactly when mn = 0,3 (mod 4) and
/// shiftable exactly when both sides are even.
ConstructionResult construct(Entry m, Entry n);

}  // namespace heffter
