#pragma once

#include "heffter/construction.hpp"

namespace heffter {

/// 3 x n Heffter array for any n >= 3; integer exactly when n = 0,1 (mod 4).
/// n = 3, 4 are fixed arrays; otherwise the n mod 8 strip family is
/// evaluated at k = (n - width) / 8 and concatenated.
ConstructionResult build_3xn(Entry n);

/// 5 x n Heffter array for any n >= 3; integer exactly when n = 0,3 (mod 4).
/// n = 3 is the transposed 3 x 5, n = 4,5,6 are fixed arrays, the rest come
/// from the 5-row strip families.
ConstructionResult build_5xn(Entry n);

}  // namespace heffter
