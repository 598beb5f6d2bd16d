#include "heffter/tile_tables.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

namespace heffter::tables {

namespace {

#include "tile_tables_data.inc"

std::vector<Affine> zeros(int n) { return std::vector<Affine>(static_cast<std::size_t>(n)); }

// The strip tables are stored transposed; orient them and attach the
// declared line sums (in tile orientation).
StripFamily make_strip(int rows, int residue, std::string_view sporadic, std::string_view family,
                       std::string_view sporadic_rsums, std::string_view family_rsums,
                       std::string_view sporadic_csums_head = {}) {
    StripFamily f;
    f.rows = rows;
    f.residue = residue;
    f.sporadic.grid = transpose(parse_affine_grid(sporadic));
    f.family.grid = transpose(parse_affine_grid(family));
    if (f.sporadic.grid.rows != rows || f.family.grid.rows != rows || f.family.grid.cols != 8)
        throw std::logic_error("strip table shape mismatch");
    f.sporadic.row_sums = parse_affine_row(sporadic_rsums);
    f.sporadic.col_sums = zeros(f.sporadic.grid.cols);
    if (!sporadic_csums_head.empty()) f.sporadic.col_sums[0] = parse_affine(sporadic_csums_head);
    f.family.row_sums = parse_affine_row(family_rsums);
    f.family.col_sums = zeros(8);
    return f;
}

std::array<StripFamily, 8> make_three_row_families() {
    return {
        make_strip(3, 0, kRows3Mod0A, kRows3Mod0F, "4k & -2k & -2k", "-4 & 2 & 2"),
        make_strip(3, 1, kRows3Mod1A, kRows3Mod1F, "4k & -2k & -2k", "-4 & 2 & 2"),
        make_strip(3, 2, kRows3Mod2A, kRows3Mod2F, "54k+61 & 42k+61 & -48k-61", "-6 & 6 & 0", "48k+61"),
        make_strip(3, 3, kRows3Mod3A, kRows3Mod3F, "48k+67 & 0 & 0", "0 & 0 & 0", "48k+67"),
        make_strip(3, 4, kRows3Mod4A, kRows3Mod4F, "0 & 0 & 0", "0 & 0 & 0"),
        make_strip(3, 5, kRows3Mod5A, kRows3Mod5F, "2k & -4k & 2k", "-2 & 4 & -2"),
        make_strip(3, 6, kRows3Mod6A, kRows3Mod6F, "4k & -50k-37 & 94k+74", "-4 & 2 & 2", "48k+37"),
        make_strip(3, 7, kRows3Mod7A, kRows3Mod7F, "0 & 0 & 48k+43", "0 & 0 & 0", "48k+43"),
    };
}

std::array<StripFamily, 8> make_five_row_families() {
    const std::string_view z5 = "0 & 0 & 0 & 0 & 0";
    return {
        make_strip(5, 0, kRows5Mod0A, kRows5Mod0F, z5, z5),
        make_strip(5, 1, kRows5Mod1A, kRows5Mod1F, "0 & 0 & -80k-91 & 0 & 160k+182", z5, "80k+91"),
        make_strip(5, 2, kRows5Mod2A, kRows5Mod2F, "0 & 0 & 0 & 0 & 80k+101", z5, "80k+101"),
        make_strip(5, 3, kRows5Mod3A, kRows5Mod3F, z5, z5),
        make_strip(5, 4, kRows5Mod4A, kRows5Mod4F, z5, z5),
        make_strip(5, 5, kRows5Mod5A, kRows5Mod5F, "0 & -80k-131 & 0 & 0 & 160k+262", z5, "80k+131"),
        make_strip(5, 6, kRows5Mod6A, kRows5Mod6F, "-80k-141 & -80k-141 & 80k+141 & 0 & 160k+282", z5, "80k+141"),
        make_strip(5, 7, kRows5Mod7A, kRows5Mod7F, z5, z5),
    };
}

FormulaTile make_formula(std::string_view table, std::string_view rsums = {}, std::string_view csums = {}) {
    FormulaTile t;
    t.grid = parse_affine_grid(table);
    t.row_sums = rsums.empty() ? zeros(t.grid.rows) : parse_affine_row(rsums);
    t.col_sums = csums.empty() ? zeros(t.grid.cols) : parse_affine_row(csums);
    if (static_cast<int>(t.row_sums.size()) != t.grid.rows || static_cast<int>(t.col_sums.size()) != t.grid.cols)
        throw std::logic_error("formula tile sum shape mismatch");
    return t;
}

}  // namespace

Tile FormulaTile::eval(const Bindings& b, TileProvenance prov) const {
    Tile t;
    t.grid = grid.eval(b);
    t.declared_sums.row_sums.reserve(row_sums.size());
    for (const Affine& a : row_sums) t.declared_sums.row_sums.push_back(a.eval(b));
    t.declared_sums.col_sums.reserve(col_sums.size());
    for (const Affine& a : col_sums) t.declared_sums.col_sums.push_back(a.eval(b));
    t.provenance = std::move(prov);
    return t;
}

Tile StripFamily::sporadic_tile(Entry k) const {
    return sporadic.eval({.k = k}, {.family = std::to_string(rows) + "-row strip",
                                    .variant = "sporadic, n mod 8 = " + std::to_string(residue),
                                    .params = {{"k", k}}});
}

Tile StripFamily::family_tile(Entry k, Entry r) const {
    return family.eval({.k = k, .r = r}, {.family = std::to_string(rows) + "-row strip",
                                          .variant = "family, n mod 8 = " + std::to_string(residue),
                                          .params = {{"k", k}, {"r", r}}});
}

const StripFamily& strip_family(int rows, int residue) {
    static const std::array<StripFamily, 8> three = make_three_row_families();
    static const std::array<StripFamily, 8> five = make_five_row_families();
    if (residue < 0 || residue > 7) throw std::invalid_argument("strip_family: residue out of range");
    if (rows == 3) return three[static_cast<std::size_t>(residue)];
    if (rows == 5) return five[static_cast<std::size_t>(residue)];
    throw std::invalid_argument("strip_family: rows must be 3 or 5");
}

const FormulaTile& stack9_corner() {
    static const FormulaTile t = make_formula(kStack9Corner, "2x+1 & 0&0&0&0&0&0&0&0", "2x+1 & 0&0&0&0&0");
    return t;
}

const FormulaTile& stack9_family() {
    static const FormulaTile t = make_formula(kStack9Family);
    return t;
}

const FormulaTile& stack7_corner() {
    static const FormulaTile t = make_formula(kStack7Corner, "2x+1 & 0&0&0&0&0&0", "2x+1 & 0&0&0&0&0");
    return t;
}

const FormulaTile& stack7_family() {
    static const FormulaTile t = make_formula(kStack7Family);
    return t;
}

const FormulaTile& l11_corner() {
    static const FormulaTile t =
        make_formula(kL11Corner, "0 & 2x+1 & 0&0&0&0&0&0&0", "0 & 2x+1 & -2x-1 & 0 & 2x+1 & 0&0&0&0");
    return t;
}

const FormulaTile& l11_border() {
    static const FormulaTile t = make_formula(kL11Border);
    return t;
}

const FormulaTile& l33_corner() {
    static const FormulaTile t = make_formula(kL33Corner, "2x+1 & 0&0&0&0&0&0", "2x+1 & 0&0&0&0&0&0");
    return t;
}

const FormulaTile& l33_border() {
    static const FormulaTile t = make_formula(kL33Border);
    return t;
}

const FormulaTile& l13_corner() {
    static const FormulaTile t = make_formula(kL13Corner);
    return t;
}

const FormulaTile& l13_top_border() {
    static const FormulaTile t = make_formula(kL13TopBorder);
    return t;
}

const FormulaTile& l13_side_border() {
    static const FormulaTile t = make_formula(kL13SideBorder);
    return t;
}

}  // namespace heffter::tables
