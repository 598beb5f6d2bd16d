#pragma once

#include <optional>

#include "heffter/skolem.hpp"

namespace heffter {

/// Partition {1..3n} into n triples {a,b,c} with a+b = c, also allowing
/// a+b+c = 6n+1 when wrap_mode is set. Solved as exact cover with
/// deterministic fewest-candidates branching; seed != 0 shuffles the
/// candidate row order for reproducible alternative solutions. Returns
/// nullopt when no partition exists. Capped at n <= 20.
std::optional<TriplePartition> triples_exact_cover(Entry n, bool wrap_mode, unsigned seed = 0);

}  // namespace heffter
