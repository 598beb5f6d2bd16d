#include "heffter/skolem.hpp"

#include <algorithm>
#include <stdexcept>

namespace heffter {

SkolemCheck verify_skolem(const SkolemSequence& seq) {
    const int n = seq.order;
    if (n < 1) return {false, 0, "order must be positive"};
    if (static_cast<int>(seq.values.size()) != seq.expected_length())
        return {false, 0,
                "length " + std::to_string(seq.values.size()) + ", expected " + std::to_string(seq.expected_length())};
    for (int v : seq.values)
        if (v < 1 || v > n) return {false, v, "value " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]"};

    // first and second positions (1-based) of each value
    std::vector<int> first(static_cast<std::size_t>(n) + 1, 0), count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> gap(static_cast<std::size_t>(n) + 1, 0);
    for (int pos = 1; pos <= static_cast<int>(seq.values.size()); ++pos) {
        const int v = seq.values[static_cast<std::size_t>(pos) - 1];
        if (count[v] == 0) first[v] = pos;
        else gap[v] = pos - first[v];
        if (++count[v] > 2) return {false, v, "value " + std::to_string(v) + " appears more than twice"};
    }
    for (int j = 1; j <= n; ++j) {
        const bool excl = std::ranges::find(seq.excluded, j) != seq.excluded.end();
        if (excl) {
            if (count[j] != 0) return {false, j, "excluded value " + std::to_string(j) + " appears"};
            continue;
        }
        if (count[j] != 2)
            return {false, j, "value " + std::to_string(j) + " appears " + std::to_string(count[j]) + " times"};
        if (gap[j] != j)
            return {false, j, "positions of " + std::to_string(j) + " differ by " + std::to_string(gap[j])};
    }
    return {true, 0, ""};
}

namespace {

bool place(std::vector<int>& slots, std::vector<bool>& used, const std::vector<int>& allowed) {
    // leftmost empty slot must hold the left occurrence of some value
    auto it = std::ranges::find(slots, 0);
    if (it == slots.end()) return true;
    const int pos = static_cast<int>(it - slots.begin());
    for (int j : allowed) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const int partner = pos + j;
        if (partner >= static_cast<int>(slots.size()) || slots[static_cast<std::size_t>(partner)] != 0) continue;
        slots[static_cast<std::size_t>(pos)] = slots[static_cast<std::size_t>(partner)] = j;
        used[static_cast<std::size_t>(j)] = true;
        if (place(slots, used, allowed)) return true;
        slots[static_cast<std::size_t>(pos)] = slots[static_cast<std::size_t>(partner)] = 0;
        used[static_cast<std::size_t>(j)] = false;
    }
    return false;
}

}  // namespace

std::optional<SkolemSequence> find_skolem(int order, std::vector<int> excluded) {
    if (order < 1) throw std::invalid_argument("find_skolem: order must be positive");
    std::ranges::sort(excluded);
    std::vector<int> allowed;
    for (int j = order; j >= 1; --j)  // large values first, prunes faster
        if (!std::ranges::binary_search(excluded, j)) allowed.push_back(j);

    std::vector<int> slots(2 * allowed.size(), 0);
    std::vector<bool> used(static_cast<std::size_t>(order) + 1, false);
    if (!place(slots, used, allowed)) return std::nullopt;
    SkolemSequence seq{order, std::move(excluded), std::move(slots)};
    return seq;
}

TriplePartition skolem_to_triples(const SkolemSequence& seq) {
    if (!seq.excluded.empty()) throw std::invalid_argument("skolem_to_triples: needs a plain sequence");
    const SkolemCheck check = verify_skolem(seq);
    if (!check.ok) throw std::invalid_argument("skolem_to_triples: invalid sequence: " + check.detail);

    const Entry n = seq.order;
    std::vector<Entry> first(static_cast<std::size_t>(n) + 1, 0);
    TriplePartition part{n, {}};
    part.triples.resize(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= 2 * n; ++pos) {
        const int v = seq.values[static_cast<std::size_t>(pos) - 1];
        if (first[v] == 0) first[v] = pos;
        else part.triples[static_cast<std::size_t>(v) - 1] = {v, first[v] + n, pos + n, Triple::Mode::sum};
    }
    return part;
}

}  // namespace heffter
