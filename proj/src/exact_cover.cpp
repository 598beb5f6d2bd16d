#include "heffter/exact_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace heffter {

namespace {

// universe {1..3n} fits one 64-bit mask for n <= 20
struct Row {
    Triple triple;
    std::uint64_t mask = 0;
};

struct Cover {
    const std::vector<Row>& rows;
    std::uint64_t full;
    std::uint64_t covered = 0;
    std::vector<Triple> chosen;

    explicit Cover(const std::vector<Row>& r, std::uint64_t full_) : rows(r), full(full_) {}

    bool solve() {
        if (covered == full) return true;
        // branch on the uncovered element with the fewest candidate rows
        int best_elem = -1, best_count = -1;
        for (int e = 0; e < 64; ++e) {
            const std::uint64_t bit = std::uint64_t{1} << e;
            if (!(full & bit) || (covered & bit)) continue;
            int count = 0;
            for (const Row& row : rows)
                if ((row.mask & bit) && !(row.mask & covered)) ++count;
            if (count == 0) return false;
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_elem = e;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << best_elem;
        for (const Row& row : rows) {
            if (!(row.mask & bit) || (row.mask & covered)) continue;
            covered |= row.mask;
            chosen.push_back(row.triple);
            if (solve()) return true;
            chosen.pop_back();
            covered &= ~row.mask;
        }
        return false;
    }
};

}  // namespace

std::optional<TriplePartition> triples_exact_cover(Entry n, bool wrap_mode, unsigned seed) {
    if (n < 1) throw std::invalid_argument("triples_exact_cover: n must be positive");
    if (n > 20) throw std::invalid_argument("triples_exact_cover: n > 20 exceeds solver cap");

    const Entry top = 3 * n;
    auto mask_of = [](Entry a, Entry b, Entry c) {
        return (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1)) | (std::uint64_t{1} << (c - 1));
    };
    std::vector<Row> rows;
    for (Entry a = 1; a <= top; ++a)
        for (Entry b = a + 1; b <= top; ++b) {
            const Entry c = a + b;
            if (c <= top && c > b) rows.push_back({{a, b, c, Triple::Mode::sum}, mask_of(a, b, c)});
            if (wrap_mode) {
                const Entry w = 6 * n + 1 - a - b;
                if (w > b && w <= top) rows.push_back({{a, b, w, Triple::Mode::wrap}, mask_of(a, b, w)});
            }
        }
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(rows.begin(), rows.end(), rng);
    }

    const std::uint64_t full = (top == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << top) - 1);
    Cover cover(rows, full);
    if (!cover.solve()) return std::nullopt;
    return TriplePartition{n, std::move(cover.chosen)};
}

}  // namespace heffter
