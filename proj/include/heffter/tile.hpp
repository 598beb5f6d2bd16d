#pragma once

#include <map>
#include <span>
#include <string>

#include "heffter/grid.hpp"

namespace heffter {

enum class Axis { horizontal, vertical };

/// Where a tile came from: which construction family, which case within it,
/// and the parameter values it was evaluated at.
struct TileProvenance {
    std::string family;
    std::string variant;
    std::map<std::string, Entry> params;
};

/// A rectangular building block. Unlike a full array, a tile's line sums need
/// not vanish; the sums its family promises are carried along as data so they
/// can be checked against the evaluated entries.
struct Tile {
    Grid grid;
    LineSums declared_sums;
    TileProvenance provenance;

    int rows() const { return grid.rows(); }
    int cols() const { return grid.cols(); }
};

Tile shift(const Tile& t, Entry k);
Tile transpose(const Tile& t);

/// Concatenate tiles along an axis. Declared sums combine: along the axis
/// they add, across it they are laid side by side.
Tile concat(Axis axis, std::span<const Tile> blocks);

}  // namespace heffter
