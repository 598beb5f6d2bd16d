#include "heffter/even_constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/base_arrays.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

Tile seed_tile(const Grid& g, std::string name) {
    Tile t;
    t.grid = g;
    t.declared_sums.row_sums.assign(static_cast<std::size_t>(g.rows()), 0);
    t.declared_sums.col_sums.assign(static_cast<std::size_t>(g.cols()), 0);
    t.provenance = {.family = "even-tiling", .variant = std::move(name), .params = {}};
    return t;
}

}  // namespace

const Tile& base_4x4() {
    static const Tile t = seed_tile(base::h4x4(), "seed 4x4");
    return t;
}

const Tile& base_4x6() {
    static const Tile t = seed_tile(base::h4x6(), "seed 4x6");
    return t;
}

const Tile& base_6x6() {
    static const Tile t = seed_tile(base::h6x6(), "seed 6x6");
    return t;
}

ConstructionResult build_even(Entry m, Entry n) {
    const Necessity nec = assert_necessity(m, n, HeffterClass::shiftable);
    if (!nec.allowed) throw std::invalid_argument("build_even: " + nec.reason);

    // The strip recipes need n to absorb the width-6 seeds; a 2 mod 4 row
    // count with a 0 mod 4 column count is handled as the transpose.
    if (m % 4 == 2 && n % 4 == 0) return transposed(build_even(n, m));

    Provenance prov;
    prov.method = "even-tiling";
    prov.variant = "m mod 4 = " + std::to_string(m % 4) + ", n mod 4 = " + std::to_string(n % 4);
    prov.params = {{"m", m}, {"n", n}};

    Entry offset = 0;  // cumulative support already consumed
    auto place = [&](const Grid& g, const std::string& name, int row0, int col0) {
        Grid shifted = shift(g, offset);
        prov.placements.push_back({name, row0, col0, g.rows(), g.cols(), offset, offset + 1, offset + g.size()});
        offset += g.size();
        return shifted;
    };

    std::vector<Grid> strips;
    int row = 0;
    if (m % 4 == 2) {
        // lead 6-row strip: the 6x6 seed, then transposed 4x6 seeds
        std::vector<Grid> parts;
        int col = 0;
        parts.push_back(place(base_6x6().grid, "seed 6x6", row, col));
        col += 6;
        const Grid t46 = transpose(base_4x6().grid);
        for (; col < n; col += 4) parts.push_back(place(t46, "seed 4x6 transposed", row, col));
        strips.push_back(hconcat(parts));
        row = 6;
    }
    for (; row < m; row += 4) {
        std::vector<Grid> parts;
        int col = 0;
        if (n % 4 == 2) {
            parts.push_back(place(base_4x6().grid, "seed 4x6", row, col));
            col += 6;
        }
        for (; col < n; col += 4) parts.push_back(place(base_4x4().grid, "seed 4x4", row, col));
        strips.push_back(hconcat(parts));
    }

    return {HeffterCandidate(vconcat(strips)), std::move(prov),
            {.modular = true, .integer = true, .shiftable = true}};
}

}  // namespace heffter
