#include "heffter/low_rows.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/base_arrays.hpp"
#include "heffter/tile_tables.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

ConstructionResult fixed_case(const Grid& g, std::string method, std::string variant, bool integer) {
    Provenance prov;
    prov.method = std::move(method);
    prov.variant = std::move(variant);
    prov.params = {{"m", g.rows()}, {"n", g.cols()}};
    prov.placements = {{"fixed", 0, 0, g.rows(), g.cols(), 0, 0, 0}};
    return {HeffterCandidate(g), std::move(prov), {.modular = true, .integer = integer, .shiftable = false}};
}

ConstructionResult build_strip(int rows, Entry n, bool integer) {
    const int residue = static_cast<int>(n % 8);
    const tables::StripFamily& fam = tables::strip_family(rows, residue);
    const Entry k = (n - fam.sporadic_cols()) / 8;
    if (k < 0 || n != 8 * k + fam.sporadic_cols())
        throw std::logic_error("strip construction: no family for n = " + std::to_string(n));

    Provenance prov;
    prov.method = std::to_string(rows) + "-row strip";
    prov.variant = "n mod 8 = " + std::to_string(residue);
    prov.params = {{"m", rows}, {"n", n}, {"k", k}};

    std::vector<Grid> parts;
    parts.push_back(fam.sporadic_tile(k).grid);
    prov.placements.push_back({"sporadic", 0, 0, rows, fam.sporadic_cols(), 0, 0, 0});
    for (Entry r = 0; r < k; ++r) {
        parts.push_back(fam.family_tile(k, r).grid);
        prov.placements.push_back(
            {"family r=" + std::to_string(r), 0, fam.sporadic_cols() + static_cast<int>(8 * r), rows, 8, 0, 0, 0});
    }
    return {HeffterCandidate(hconcat(parts)), std::move(prov),
            {.modular = true, .integer = integer, .shiftable = false}};
}

}  // namespace

ConstructionResult build_3xn(Entry n) {
    const Necessity nec = assert_necessity(3, n, HeffterClass::modular);
    if (!nec.allowed) throw std::invalid_argument("build_3xn: " + nec.reason);
    const bool integer = (n % 4 == 0 || n % 4 == 1);
    if (n == 3) return fixed_case(base::h3x3(), "3-row strip", "fixed 3x3", integer);
    if (n == 4) return fixed_case(base::h3x4(), "3-row strip", "fixed 3x4", integer);
    return build_strip(3, n, integer);
}

ConstructionResult build_5xn(Entry n) {
    const Necessity nec = assert_necessity(5, n, HeffterClass::modular);
    if (!nec.allowed) throw std::invalid_argument("build_5xn: " + nec.reason);
    const bool integer = (n % 4 == 0 || n % 4 == 3);
    if (n == 3) return transposed(build_3xn(5));
    if (n == 4) return fixed_case(base::h5x4(), "5-row strip", "fixed 5x4", integer);
    if (n == 5) return fixed_case(base::h5x5(), "5-row strip", "fixed 5x5", integer);
    if (n == 6) return fixed_case(base::h5x6(), "5-row strip", "fixed 5x6", integer);
    return build_strip(5, n, integer);
}

}  // namespace heffter
