#pragma once

#include <map>
#include <string>
#include <vector>

#include "heffter/candidate.hpp"
#include "heffter/grid.hpp"

namespace heffter {

struct ClaimedClass {
    bool modular = true;
    bool integer = false;
    bool shiftable = false;

    friend bool operator==(const ClaimedClass&, const ClaimedClass&) = default;
};

/// One tile in an assembled array: where it sits, how far it was shifted,
/// and (when its support is one contiguous band) which values it covers.
struct TilePlacement {
    std::string tile;
    int row = 0;
    int col = 0;
    int rows = 0;
    int cols = 0;
    Entry shift = 0;
    Entry support_lo = 0;  // 0,0 when the band is not contiguous
    Entry support_hi = 0;
};

struct Provenance {
    std::string method;
    std::string variant;
    std::map<std::string, Entry> params;
    std::vector<TilePlacement> placements;
};

struct ConstructionResult {
    HeffterCandidate array;
    Provenance provenance;
    ClaimedClass claimed;
};

/// Transpose an assembled result: grid transposed, placements mirrored,
/// class flags unchanged (all three are symmetric in m and n).
ConstructionResult transposed(const ConstructionResult& r);

/// Copy a sub-result's placements into prov, offset to (row0, col0) and with
/// delta added to the shift and to any contiguous support band.
void append_placements(Provenance& prov, const ConstructionResult& block, int row0, int col0, Entry delta);

}  // namespace heffter
