#include "heffter/l_construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/even_constructions.hpp"
#include "heffter/tile_tables.hpp"

namespace heffter {

namespace {

struct BorderPlan {
    const tables::FormulaTile* tile = nullptr;
    Entry first_r = 0;
    Entry count = 0;
};

// Corner in the top-left, `top` border tiles rightward, `side` border tiles
// (transposed) downward, interior even block shifted past everything else.
ConstructionResult assemble_l(std::string variant, Entry m, Entry n, Entry s, Entry k,
                              const tables::FormulaTile& corner, const BorderPlan& top, const BorderPlan& side,
                              Entry interior_rows, Entry interior_cols, Entry interior_shift, bool integer) {
    const Entry x = m * n;
    const Entry y = s + k;
    const int cr = corner.grid.rows, cc = corner.grid.cols;
    const Bindings border_bind_base{.k = k, .s = s};

    Provenance prov;
    prov.method = "l-border";
    prov.variant = std::move(variant);
    prov.params = {{"m", m}, {"n", n}, {"s", s}, {"k", k}, {"x", x}, {"y", y}};

    std::vector<Grid> top_parts;
    top_parts.push_back(corner.eval({.x = x, .y = y}, {"l-border", "corner", {{"x", x}, {"y", y}}}).grid);
    prov.placements.push_back({"corner", 0, 0, cr, cc, 0, 0, 0});
    for (Entry i = 0; i < top.count; ++i) {
        Bindings b = border_bind_base;
        b.r = top.first_r + i;
        top_parts.push_back(top.tile->eval(b, {"l-border", "top border", {{"r", b.r}}}).grid);
        prov.placements.push_back({"top border r=" + std::to_string(b.r), 0, cc + static_cast<int>(4 * i), cr, 4, 0, 0, 0});
    }
    std::vector<Grid> blocks = {hconcat(top_parts)};

    if (m > cr) {
        std::vector<Grid> side_parts;
        for (Entry i = 0; i < side.count; ++i) {
            Bindings b = border_bind_base;
            b.r = side.first_r + i;
            side_parts.push_back(transpose(side.tile->eval(b, {"l-border", "side border", {{"r", b.r}}}).grid));
            prov.placements.push_back(
                {"side border r=" + std::to_string(b.r), cr + static_cast<int>(4 * i), 0, 4, cc, 0, 0, 0});
        }
        std::vector<Grid> bottom_parts = {vconcat(side_parts)};
        if (interior_rows > 0 && interior_cols > 0) {
            ConstructionResult interior = build_even(interior_rows, interior_cols);
            append_placements(prov, interior, cr, cc, interior_shift);
            bottom_parts.push_back(shift(interior.array.grid(), interior_shift));
        }
        blocks.push_back(hconcat(bottom_parts));
    }

    return {HeffterCandidate(vconcat(blocks)), std::move(prov),
            {.modular = true, .integer = integer, .shiftable = false}};
}

}  // namespace

ConstructionResult build_1mod4_1mod4(Entry m, Entry n) {
    if (m < 9 || m % 4 != 1) throw std::invalid_argument("build_1mod4_1mod4: m must be 1 mod 4 and >= 9");
    if (n < 9 || n % 4 != 1) throw std::invalid_argument("build_1mod4_1mod4: n must be 1 mod 4 and >= 9");
    const Entry s = (m - 1) / 4, k = (n - 1) / 4;
    // One border family of s+k-4 tiles, split top then side.
    const BorderPlan top{&tables::l11_border(), 0, k - 2};
    const BorderPlan side{&tables::l11_border(), k - 2, s - 2};
    return assemble_l("9x9 corner", m, n, s, k, tables::l11_corner(), top, side, 4 * s - 8, 4 * k - 8,
                      36 * s + 36 * k - 81, false);
}

ConstructionResult build_3mod4_3mod4(Entry m, Entry n) {
    if (m < 7 || m % 4 != 3) throw std::invalid_argument("build_3mod4_3mod4: m must be 3 mod 4 and >= 7");
    if (n < 7 || n % 4 != 3) throw std::invalid_argument("build_3mod4_3mod4: n must be 3 mod 4 and >= 7");
    const Entry s = (m - 3) / 4, k = (n - 3) / 4;
    const BorderPlan top{&tables::l33_border(), 0, k - 1};
    const BorderPlan side{&tables::l33_border(), k - 1, s - 1};
    return assemble_l("7x7 corner", m, n, s, k, tables::l33_corner(), top, side, 4 * s - 4, 4 * k - 4,
                      28 * s + 28 * k - 11, false);
}

ConstructionResult build_1mod4_3mod4(Entry m, Entry n) {
    if (m < 9 || m % 4 != 1) throw std::invalid_argument("build_1mod4_3mod4: m must be 1 mod 4 and >= 9");
    if (n < 7 || n % 4 != 3) throw std::invalid_argument("build_1mod4_3mod4: n must be 3 mod 4 and >= 7");
    const Entry s = (m - 1) / 4, k = (n - 3) / 4;
    // Separate top and side families; this is the integer case.
    const BorderPlan top{&tables::l13_top_border(), 0, k - 1};
    const BorderPlan side{&tables::l13_side_border(), 0, s - 2};
    return assemble_l("9x7 corner", m, n, s, k, tables::l13_corner(), top, side, 4 * s - 8, 4 * k - 4,
                      28 * s + 36 * k - 37, true);
}

}  // namespace heffter
