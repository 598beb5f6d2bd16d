#include "heffter/tile.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace heffter {

Tile shift(const Tile& t, Entry k) {
    Tile out;
    out.grid = shift(t.grid, k);
    out.declared_sums = line_sums(out.grid);
    out.provenance = t.provenance;
    out.provenance.params["shift"] = t.provenance.params.count("shift") ? t.provenance.params.at("shift") + k : k;
    return out;
}

Tile transpose(const Tile& t) {
    Tile out;
    out.grid = transpose(t.grid);
    out.declared_sums = {t.declared_sums.col_sums, t.declared_sums.row_sums};
    out.provenance = t.provenance;
    out.provenance.params["transposed"] = 1 - (t.provenance.params.count("transposed") ? t.provenance.params.at("transposed") : 0);
    return out;
}

Tile concat(Axis axis, std::span<const Tile> blocks) {
    if (blocks.empty()) throw std::invalid_argument("concat: no blocks");
    std::vector<Grid> grids;
    grids.reserve(blocks.size());
    for (const Tile& t : blocks) grids.push_back(t.grid);

    Tile out;
    out.grid = (axis == Axis::horizontal) ? hconcat(grids) : vconcat(grids);
    out.provenance.family = blocks.front().provenance.family;
    out.provenance.variant = "concat";

    // Along the concat axis sums add; across it they are juxtaposed.
    if (axis == Axis::horizontal) {
        out.declared_sums.row_sums.assign(out.grid.rows(), 0);
        for (const Tile& t : blocks) {
            if (t.grid.empty()) continue;
            for (int r = 0; r < t.rows(); ++r) out.declared_sums.row_sums[r] += t.declared_sums.row_sums[r];
            out.declared_sums.col_sums.insert(out.declared_sums.col_sums.end(), t.declared_sums.col_sums.begin(),
                                              t.declared_sums.col_sums.end());
        }
    } else {
        out.declared_sums.col_sums.assign(out.grid.cols(), 0);
        for (const Tile& t : blocks) {
            if (t.grid.empty()) continue;
            for (int c = 0; c < t.cols(); ++c) out.declared_sums.col_sums[c] += t.declared_sums.col_sums[c];
            out.declared_sums.row_sums.insert(out.declared_sums.row_sums.end(), t.declared_sums.row_sums.begin(),
                                              t.declared_sums.row_sums.end());
        }
    }
    return out;
}

}  // namespace heffter
