#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace heffter {

using Entry = std::int64_t;

/// Exact (unreduced) row and column sums of an integer matrix.
struct LineSums {
    std::vector<Entry> row_sums;
    std::vector<Entry> col_sums;

    bool all_zero() const;
    friend bool operator==(const LineSums&, const LineSums&) = default;
};

/// Dense row-major integer matrix. Rows or columns may be zero (degenerate
/// blocks that vanish at edge parameters are represented, not special-cased).
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols);
    Grid(int rows, int cols, std::vector<Entry> entries);
    static Grid from_rows(std::initializer_list<std::initializer_list<Entry>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    std::int64_t size() const { return static_cast<std::int64_t>(rows_) * cols_; }

    Entry at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    Entry& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::span<const Entry> entries() const { return entries_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
};

/// Move every entry k further from zero: e > 0 becomes e + k, e < 0 becomes
/// e - k. Requires all entries nonzero and k >= 0.
Grid shift(const Grid& g, Entry k);

Grid transpose(const Grid& g);
Grid negate(const Grid& g);

/// Concatenate blocks left-to-right (all with equal row count) or
/// top-to-bottom (equal column count). A mismatched block is reported by
/// index. Degenerate blocks are skipped.
Grid hconcat(std::span<const Grid> blocks);
Grid vconcat(std::span<const Grid> blocks);

/// Multiset of absolute values of all entries, sorted ascending.
std::vector<Entry> support(const Grid& g);

LineSums line_sums(const Grid& g);

}  // namespace heffter
