#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heffter/grid.hpp"

namespace heffter {

/// A Skolem-type sequence of order n: every value j in {1..n} outside the
/// excluded set appears exactly twice, at positions (1-based) exactly j
/// apart; excluded values do not appear. Plain sequences have an empty
/// excluded set and length 2n.
struct SkolemSequence {
    int order = 0;
    std::vector<int> excluded;  // sorted, the "K" of a K-near sequence
    std::vector<int> values;

    int expected_length() const { return 2 * (order - static_cast<int>(excluded.size())); }
};

struct SkolemCheck {
    bool ok = false;
    int witness = 0;  // first violated value, 0 if none
    std::string detail;
};

SkolemCheck verify_skolem(const SkolemSequence& seq);

/// Exhaustive backtracking: first valid sequence in deterministic order, or
/// nullopt when none exists (plain sequences exist iff n = 0,1 mod 4).
std::optional<SkolemSequence> find_skolem(int order, std::vector<int> excluded = {});

struct Triple {
    Entry a = 0, b = 0, c = 0;
    enum class Mode { sum, wrap } mode = Mode::sum;  // a+b=c, or a+b+c = 6n+1

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// n triples partitioning {1..3n}, each satisfying its mode equation.
struct TriplePartition {
    Entry order = 0;
    std::vector<Triple> triples;
};

/// The classical map from a plain Skolem sequence of order n to a partition
/// of {1..3n} into difference triples {j, l(j)+n, r(j)+n}, all in sum mode.
TriplePartition skolem_to_triples(const SkolemSequence& seq);

}  // namespace heffter
