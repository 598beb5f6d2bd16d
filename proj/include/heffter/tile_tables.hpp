#pragma once

#include <vector>

#include "heffter/affine.hpp"
#include "heffter/tile.hpp"

namespace heffter::tables {

/// A formula tile: affine entry grid plus the line sums its construction
/// promises, both evaluated at concrete parameter values.
struct FormulaTile {
    AffineGrid grid;
    std::vector<Affine> row_sums;
    std::vector<Affine> col_sums;

    Tile eval(const Bindings& b, TileProvenance prov) const;
};

/// One residue case of the 3-row or 5-row strip construction: a sporadic
/// lead tile whose width fixes n mod 8, then a repeating width-8 family tile
/// indexed by r. The strip [A | A_0 | ... | A_{k-1}] realizes n = 8k + width.
struct StripFamily {
    int rows = 0;     // 3 or 5
    int residue = 0;  // n mod 8
    FormulaTile sporadic;
    FormulaTile family;

    int sporadic_cols() const { return sporadic.grid.cols; }
    Tile sporadic_tile(Entry k) const;
    Tile family_tile(Entry k, Entry r) const;
};

/// rows must be 3 or 5; residue in [0, 8).
const StripFamily& strip_family(int rows, int residue);

// Variable tiles for odd x (2 mod 4) stacking; corner entries are affine in
// x (bound to mn), family entries in k and r.
const FormulaTile& stack9_corner();  // 9x6
const FormulaTile& stack9_family();  // 9x4
const FormulaTile& stack7_corner();  // 7x6
const FormulaTile& stack7_family();  // 7x4

// Corner and border tiles for the odd x odd L-constructions; corners are
// affine in x = mn and y = s + k, borders in s, k, r.
const FormulaTile& l11_corner();       // 9x9, both sides 1 mod 4
const FormulaTile& l11_border();       // 9x4
const FormulaTile& l33_corner();       // 7x7, both sides 3 mod 4
const FormulaTile& l33_border();       // 7x4
const FormulaTile& l13_corner();       // 9x7, 1 mod 4 by 3 mod 4
const FormulaTile& l13_top_border();   // 9x4
const FormulaTile& l13_side_border();  // 7x4

}  // namespace heffter::tables
