#include "heffter/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heffter {

bool LineSums::all_zero() const {
    auto zero = [](Entry v) { return v == 0; };
    return std::ranges::all_of(row_sums, zero) && std::ranges::all_of(col_sums, zero);
}

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("grid: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Grid::Grid(int rows, int cols, std::vector<Entry> entries) : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("grid: negative dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("grid: entry count does not match dimensions");
}

Grid Grid::from_rows(std::initializer_list<std::initializer_list<Entry>> rows) {
    std::vector<Entry> flat;
    int n_cols = rows.size() ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_cols)
            throw std::invalid_argument("grid: ragged row list");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Grid(static_cast<int>(rows.size()), n_cols, std::move(flat));
}

Grid shift(const Grid& g, Entry k) {
    if (k < 0) throw std::invalid_argument("shift: negative amount");
    Grid out = g;
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) {
            Entry& e = out.at(r, c);
            if (e == 0) throw std::invalid_argument("shift: zero entry");
            e += (e > 0) ? k : -k;
        }
    return out;
}

Grid transpose(const Grid& g) {
    Grid out(g.cols(), g.rows());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) out.at(c, r) = g.at(r, c);
    return out;
}

Grid negate(const Grid& g) {
    Grid out = g;
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) out.at(r, c) = -out.at(r, c);
    return out;
}

Grid hconcat(std::span<const Grid> blocks) {
    if (blocks.empty()) throw std::invalid_argument("hconcat: no blocks");
    int rows = -1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) continue;
        if (rows == -1) rows = blocks[i].rows();
        else if (blocks[i].rows() != rows)
            throw std::invalid_argument("hconcat: row mismatch at block " + std::to_string(i));
    }
    if (rows == -1) return Grid();
    int cols = 0;
    for (const Grid& b : blocks)
        if (!b.empty()) cols += b.cols();
    Grid out(rows, cols);
    int at_col = 0;
    for (const Grid& b : blocks) {
        if (b.empty()) continue;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b.cols(); ++c) out.at(r, at_col + c) = b.at(r, c);
        at_col += b.cols();
    }
    return out;
}

Grid vconcat(std::span<const Grid> blocks) {
    if (blocks.empty()) throw std::invalid_argument("vconcat: no blocks");
    int cols = -1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) continue;
        if (cols == -1) cols = blocks[i].cols();
        else if (blocks[i].cols() != cols)
            throw std::invalid_argument("vconcat: column mismatch at block " + std::to_string(i));
    }
    if (cols == -1) return Grid();
    int rows = 0;
    for (const Grid& b : blocks)
        if (!b.empty()) rows += b.rows();
    Grid out(rows, cols);
    int at_row = 0;
    for (const Grid& b : blocks) {
        if (b.empty()) continue;
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) out.at(at_row + r, c) = b.at(r, c);
        at_row += b.rows();
    }
    return out;
}

std::vector<Entry> support(const Grid& g) {
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(g.size()));
    for (Entry e : g.entries()) out.push_back(std::llabs(e));
    std::ranges::sort(out);
    return out;
}

LineSums line_sums(const Grid& g) {
    LineSums s;
    s.row_sums.assign(g.rows(), 0);
    s.col_sums.assign(g.cols(), 0);
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) {
            s.row_sums[r] += g.at(r, c);
            s.col_sums[c] += g.at(r, c);
        }
    return s;
}

}  // namespace heffter
