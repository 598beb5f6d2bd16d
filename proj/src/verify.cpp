#include "heffter/verify.hpp"

#include <cstdlib>
#include <string>

namespace heffter {

std::string to_string(HeffterClass c) {
    switch (c) {
        case HeffterClass::modular: return "modular";
        case HeffterClass::integer: return "integer";
        case HeffterClass::shiftable: return "shiftable";
    }
    return "?";
}

namespace {

void fail(VerificationReport& rep, std::string property, std::string location, std::string detail) {
    rep.failures.push_back({std::move(property), std::move(location), std::move(detail)});
}

}  // namespace

VerificationReport verify(const Grid& g) {
    VerificationReport rep;
    const Entry m = g.rows(), n = g.cols();
    const Entry cells = m * n;
    const Entry modulus = 2 * cells + 1;

    rep.dimension_ok = (m >= 3 && n >= 3);
    if (!rep.dimension_ok)
        fail(rep, "dimension", "", "m = " + std::to_string(m) + ", n = " + std::to_string(n) + "; need m, n >= 3");

    // Support: each absolute value in {1..mn} exactly once. A presence count
    // gives O(mn) with precise witnesses for out-of-range and duplicate kinds.
    rep.support_ok = true;
    std::vector<int> seen(static_cast<std::size_t>(cells) + 1, 0);
    for (Entry e : g.entries()) {
        const Entry a = std::llabs(e);
        if (a < 1 || a > cells) {
            rep.support_ok = false;
            fail(rep, "support", "value " + std::to_string(e),
                 "absolute value outside [1, " + std::to_string(cells) + "]");
        } else if (++seen[static_cast<std::size_t>(a)] == 2) {
            rep.support_ok = false;
            fail(rep, "support", "value " + std::to_string(a), "absolute value used more than once");
        }
    }
    for (Entry a = 1; a <= cells; ++a)
        if (seen[static_cast<std::size_t>(a)] == 0) {
            rep.support_ok = false;
            fail(rep, "support", "value " + std::to_string(a), "absolute value missing");
        }

    const LineSums sums = line_sums(g);
    rep.modular_sums_ok = true;
    rep.integer_sums_ok = true;
    auto check_line = [&](const char* kind, int index, Entry sum) {
        if (sum % modulus != 0) {
            rep.modular_sums_ok = false;
            fail(rep, std::string(kind) + "_sum", std::string(kind) + " " + std::to_string(index),
                 "sum " + std::to_string(sum) + " not 0 mod " + std::to_string(modulus));
        }
        if (sum != 0) rep.integer_sums_ok = false;
    };
    for (int r = 0; r < g.rows(); ++r) check_line("row", r, sums.row_sums[r]);
    for (int c = 0; c < g.cols(); ++c) check_line("col", c, sums.col_sums[c]);

    rep.balanced = true;
    auto check_balance = [&](const char* kind, int index, int pos, int neg) {
        if (pos != neg) {
            rep.balanced = false;
            fail(rep, "balance", std::string(kind) + " " + std::to_string(index),
                 std::to_string(pos) + " positive vs " + std::to_string(neg) + " negative entries");
        }
    };
    for (int r = 0; r < g.rows(); ++r) {
        int pos = 0, neg = 0;
        for (int c = 0; c < g.cols(); ++c) (g.at(r, c) > 0 ? pos : neg)++;
        check_balance("row", r, pos, neg);
    }
    for (int c = 0; c < g.cols(); ++c) {
        int pos = 0, neg = 0;
        for (int r = 0; r < g.rows(); ++r) (g.at(r, c) > 0 ? pos : neg)++;
        check_balance("col", c, pos, neg);
    }

    rep.is_modular_heffter = rep.dimension_ok && rep.support_ok && rep.modular_sums_ok;
    rep.is_integer_heffter = rep.is_modular_heffter && rep.integer_sums_ok;
    rep.is_shiftable = rep.is_integer_heffter && rep.balanced;
    return rep;
}

VerificationReport verify(const HeffterCandidate& c) { return verify(c.grid()); }

Necessity assert_necessity(Entry m, Entry n, HeffterClass requested) {
    if (m < 3) return {false, "m < 3"};
    if (n < 3) return {false, "n < 3"};
    const Entry res = (m * n) % 4;
    if (requested == HeffterClass::integer && (res == 1 || res == 2))
        return {false, "mn ≡ " + std::to_string(res) + " (mod 4)"};
    if (requested == HeffterClass::shiftable) {
        if (m % 2 != 0) return {false, "m is odd"};
        if (n % 2 != 0) return {false, "n is odd"};
    }
    return {true, ""};
}

}  // namespace heffter
