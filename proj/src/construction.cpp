#include "heffter/construction.hpp"

#include <utility>

namespace heffter {

ConstructionResult transposed(const ConstructionResult& r) {
    Provenance prov = r.provenance;
    prov.params["transposed"] = 1 - (prov.params.count("transposed") ? prov.params.at("transposed") : 0);
    for (TilePlacement& p : prov.placements) {
        std::swap(p.row, p.col);
        std::swap(p.rows, p.cols);
    }
    return {transpose(r.array), std::move(prov), r.claimed};
}

void append_placements(Provenance& prov, const ConstructionResult& block, int row0, int col0, Entry delta) {
    for (TilePlacement p : block.provenance.placements) {
        p.row += row0;
        p.col += col0;
        p.shift += delta;
        if (p.support_lo != 0 || p.support_hi != 0) {
            p.support_lo += delta;
            p.support_hi += delta;
        }
        prov.placements.push_back(std::move(p));
    }
}

}  // namespace heffter
