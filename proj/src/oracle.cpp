#include "heffter/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace heffter {

namespace {

struct Search {
    int m, n;
    Entry cells, modulus;
    HeffterClass cls;
    int limit;
    Grid grid;
    std::vector<bool> used;  // absolute values 1..mn
    std::vector<Entry> row_sum, col_sum;
    std::vector<int> row_bal, col_bal;  // positives minus negatives
    std::vector<HeffterCandidate> found;

    Search(int m_, int n_, HeffterClass cls_, int limit_)
        : m(m_),
          n(n_),
          cells(static_cast<Entry>(m_) * n_),
          modulus(2 * static_cast<Entry>(m_) * n_ + 1),
          cls(cls_),
          limit(limit_),
          grid(m_, n_),
          used(static_cast<std::size_t>(cells) + 1, false),
          row_sum(m_, 0),
          col_sum(n_, 0),
          row_bal(m_, 0),
          col_bal(n_, 0) {}

    bool exact() const { return cls != HeffterClass::modular; }

    // canonical representative of -partial in [-mn, mn], or 0 if impossible
    Entry forced_value(Entry partial) const {
        if (exact()) {
            const Entry v = -partial;
            return (std::llabs(v) <= cells) ? v : 0;
        }
        Entry t = (-partial) % modulus;
        if (t < 0) t += modulus;
        if (t > cells) t -= modulus;
        return t;
    }

    bool acceptable(int i, int j, Entry v) const {
        if (v == 0 || used[static_cast<std::size_t>(std::llabs(v))]) return false;
        if (i == 0 && j == 0 && v < 0) return false;
        if (i == 0 && j > 0 && std::llabs(v) < grid.at(0, 0)) return false;
        return true;
    }

    void place(int i, int j, Entry v) {
        grid.at(i, j) = v;
        used[static_cast<std::size_t>(std::llabs(v))] = true;
        row_sum[i] += v;
        col_sum[j] += v;
        row_bal[i] += (v > 0) ? 1 : -1;
        col_bal[j] += (v > 0) ? 1 : -1;
    }

    void remove(int i, int j, Entry v) {
        grid.at(i, j) = 0;
        used[static_cast<std::size_t>(std::llabs(v))] = false;
        row_sum[i] -= v;
        col_sum[j] -= v;
        row_bal[i] -= (v > 0) ? 1 : -1;
        col_bal[j] -= (v > 0) ? 1 : -1;
    }

    bool line_ok(Entry sum, int balance) const {
        if (exact() && sum != 0) return false;
        if (!exact() && sum % modulus != 0) return false;
        if (cls == HeffterClass::shiftable && balance != 0) return false;
        return true;
    }

    void try_value(int idx, int i, int j, Entry v) {
        if (!acceptable(i, j, v)) return;
        place(i, j, v);
        const bool row_done = (j == n - 1);
        const bool col_done = (i == m - 1);
        if ((!row_done || line_ok(row_sum[i], row_bal[i])) && (!col_done || line_ok(col_sum[j], col_bal[j])))
            descend(idx + 1);
        remove(i, j, v);
    }

    void descend(int idx) {
        if (static_cast<int>(found.size()) >= limit) return;
        if (idx == cells) {
            HeffterCandidate c{grid};
            const VerificationReport rep = verify(c);
            const bool pass = (cls == HeffterClass::modular)   ? rep.is_modular_heffter
                              : (cls == HeffterClass::integer) ? rep.is_integer_heffter
                                                               : rep.is_shiftable;
            if (pass) found.push_back(std::move(c));
            return;
        }
        const int i = idx / n, j = idx % n;
        if (j == n - 1) {
            try_value(idx, i, j, forced_value(row_sum[i]));
        } else if (i == m - 1) {
            try_value(idx, i, j, forced_value(col_sum[j]));
        } else {
            for (Entry a = 1; a <= cells; ++a) {
                if (used[static_cast<std::size_t>(a)]) continue;
                try_value(idx, i, j, a);
                try_value(idx, i, j, -a);
            }
        }
    }
};

}  // namespace

std::vector<HeffterCandidate> brute_force_search(int m, int n, HeffterClass cls, int limit) {
    if (m < 1 || n < 1) throw std::invalid_argument("brute_force_search: dimensions must be positive");
    if (static_cast<Entry>(m) * n > 12) throw std::invalid_argument("brute_force_search: mn > 12 exceeds search cap");
    if (limit < 1) return {};
    Search s(m, n, cls, limit);
    s.descend(0);
    return std::move(s.found);
}

}  // namespace heffter
