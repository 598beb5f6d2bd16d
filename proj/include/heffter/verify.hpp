#pragma once

#include <string>
#include <vector>

#include "heffter/candidate.hpp"
#include "heffter/grid.hpp"

namespace heffter {

enum class HeffterClass { modular, integer, shiftable };

std::string to_string(HeffterClass c);

struct VerificationFailure {
    std::string property;  // "dimension", "support", "row_sum", "col_sum", "balance"
    std::string location;  // "row 2", "col 0", "value 17"
    std::string detail;
};

/// Outcome of checking one matrix against the Heffter array definition.
/// Every property is always evaluated; nothing short-circuits, so the report
/// can feed aggregate statistics.
///
/// Classification chain: shiftable => integer => modular. The shiftable flag
/// is only asserted for arrays that are already integer Heffter arrays (a
/// bare sign-balance check is exposed separately as `balanced`).
struct VerificationReport {
    bool dimension_ok = false;  // m, n >= 3
    bool support_ok = false;    // |entries| = {1..mn} exactly
    bool modular_sums_ok = false;
    bool integer_sums_ok = false;
    bool balanced = false;  // equal +/- counts in every line

    bool is_modular_heffter = false;
    bool is_integer_heffter = false;
    bool is_shiftable = false;

    std::vector<VerificationFailure> failures;
};

VerificationReport verify(const Grid& g);
VerificationReport verify(const HeffterCandidate& c);

/// Necessity screen: can an array of the requested class exist at all for
/// these dimensions? Dimensions below 3, an integer request with
/// mn = 1,2 (mod 4), or a shiftable request with an odd side are ruled out
/// before any construction is attempted.
struct Necessity {
    bool allowed = false;
    std::string reason;  // set when forbidden
};

Necessity assert_necessity(Entry m, Entry n, HeffterClass requested);

}  // namespace heffter
