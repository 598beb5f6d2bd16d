#pragma once

#include <string_view>
#include <vector>

#include "heffter/grid.hpp"

namespace heffter {

/// Parameter values a tile formula is evaluated at.
struct Bindings {
    Entry k = 0;
    Entry r = 0;
    Entry s = 0;
    Entry x = 0;
    Entry y = 0;
};

/// Integer-affine expression in the five tile parameters,
/// c0 + ck*k + cr*r + cs*s + cx*x + cy*y.
struct Affine {
    Entry c0 = 0, ck = 0, cr = 0, cs = 0, cx = 0, cy = 0;

    Entry eval(const Bindings& b) const { return c0 + ck * b.k + cr * b.r + cs * b.s + cx * b.x + cy * b.y; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Parses expressions like "8k - 4r + 5", "-16k+2r-15", "x", "-2",
/// "12s + 12k + 24r + 16", "10y - 14". Whitespace is ignored. Anything else
/// is rejected loudly; the tables must parse exactly.
Affine parse_affine(std::string_view text);

/// Matrix of affine cells, the evaluator behind every formula tile.
struct AffineGrid {
    int rows = 0;
    int cols = 0;
    std::vector<Affine> cells;  // row-major

    const Affine& at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
    Grid eval(const Bindings& b) const;
};

/// Parses a table literal: rows separated by newlines, cells by '&'.
AffineGrid parse_affine_grid(std::string_view table);

/// Parses one '&'-separated line of affine expressions.
std::vector<Affine> parse_affine_row(std::string_view line);

AffineGrid transpose(const AffineGrid& g);

}  // namespace heffter
