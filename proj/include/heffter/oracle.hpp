#pragma once

#include <vector>

#include "heffter/candidate.hpp"
#include "heffter/verify.hpp"

namespace heffter {

/// Exhaustive depth-first search for Heffter arrays of the requested class,
/// independent of the constructive builders. Cells are assigned row-major;
/// the last cell of each row and of each column is forced by its line sum,
/// so the effective branching is over the (m-1)(n-1) free cells. Symmetry is
/// broken by fixing cell (0,0) positive with the smallest absolute value in
/// row 0 (column permutation plus global negation make this lossless for
/// existence). Results are returned in deterministic search order, each
/// re-checked by the verifier.
///
/// Hard cap mn <= 12; the search is exponential.
std::vector<HeffterCandidate> brute_force_search(int m, int n, HeffterClass cls, int limit);

}  // namespace heffter
