#include "heffter/odd_even.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/even_constructions.hpp"
#include "heffter/low_rows.hpp"
#include "heffter/tile_tables.hpp"
#include "heffter/verify.hpp"

namespace heffter {

ConstructionResult build_odd_0mod4(Entry m, Entry n) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("build_odd_0mod4: m must be odd and >= 3");
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("build_odd_0mod4: n must be 0 mod 4 and >= 4");

    const Entry top_rows = (m % 4 == 1) ? 5 : 3;
    ConstructionResult top = (top_rows == 5) ? build_5xn(n) : build_3xn(n);
    if (m == top_rows) return top;

    Provenance prov;
    prov.method = "odd-rows stack";
    prov.variant = std::to_string(top_rows) + "-row strip over even block";
    prov.params = {{"m", m}, {"n", n}};
    append_placements(prov, top, 0, 0, 0);

    const Entry delta = top_rows * n;
    ConstructionResult bottom = build_even(m - top_rows, n);
    append_placements(prov, bottom, static_cast<int>(top_rows), 0, delta);

    const Grid blocks[] = {top.array.grid(), shift(bottom.array.grid(), delta)};
    return {HeffterCandidate(vconcat(blocks)), std::move(prov),
            {.modular = true, .integer = true, .shiftable = false}};
}

ConstructionResult build_odd_2mod4(Entry m, Entry n) {
    if (m < 7 || m % 2 == 0) throw std::invalid_argument("build_odd_2mod4: m must be odd and >= 7");
    if (n < 6 || n % 4 != 2) throw std::invalid_argument("build_odd_2mod4: n must be 2 mod 4 and >= 6");

    const bool nine_row = (m % 4 == 1);
    const Entry corner_rows = nine_row ? 9 : 7;
    const Entry s = (m - (nine_row ? 1 : 3)) / 4;
    const Entry k = (n - 2) / 4;
    const Entry x = m * n;
    const tables::FormulaTile& corner = nine_row ? tables::stack9_corner() : tables::stack7_corner();
    const tables::FormulaTile& family = nine_row ? tables::stack9_family() : tables::stack7_family();

    Provenance prov;
    prov.method = "variable-tile stack";
    prov.variant = std::to_string(corner_rows) + "-row corner";
    prov.params = {{"m", m}, {"n", n}, {"s", s}, {"k", k}, {"x", x}};

    std::vector<Grid> top_parts;
    top_parts.push_back(corner.eval({.x = x}, {"variable-tile stack", "corner", {{"x", x}}}).grid);
    prov.placements.push_back({"corner", 0, 0, static_cast<int>(corner_rows), 6, 0, 0, 0});
    for (Entry r = 0; r + 2 <= k; ++r) {
        top_parts.push_back(family.eval({.k = k, .r = r}, {"variable-tile stack", "family", {{"k", k}, {"r", r}}}).grid);
        prov.placements.push_back({"family r=" + std::to_string(r), 0, static_cast<int>(6 + 4 * r),
                                   static_cast<int>(corner_rows), 4, 0, 0, 0});
    }

    std::vector<Grid> blocks = {hconcat(top_parts)};
    const Entry interior_rows = m - corner_rows;
    if (interior_rows > 0) {
        const Entry delta = nine_row ? 36 * k - 30 : 28 * k - 22;
        ConstructionResult interior = build_even(interior_rows, n);
        append_placements(prov, interior, static_cast<int>(corner_rows), 0, delta);
        blocks.push_back(shift(interior.array.grid(), delta));
    }

    return {HeffterCandidate(vconcat(blocks)), std::move(prov),
            {.modular = true, .integer = false, .shiftable = false}};
}

}  // namespace heffter
