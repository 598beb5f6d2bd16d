#pragma once

#include "heffter/grid.hpp"

namespace heffter {

/// An m x n matrix proposed as a Heffter array, held with canonical entry
/// representatives: every entry is nonzero and within [-mn, mn]. The working
/// modulus is always 2mn + 1; entries stay exact integers and modular
/// reduction happens only in the verifier.
class HeffterCandidate {
public:
    explicit HeffterCandidate(Grid g);

    const Grid& grid() const { return grid_; }
    int rows() const { return grid_.rows(); }
    int cols() const { return grid_.cols(); }
    Entry modulus() const { return 2 * static_cast<Entry>(rows()) * cols() + 1; }

    friend bool operator==(const HeffterCandidate&, const HeffterCandidate&) = default;

private:
    Grid grid_;
};

HeffterCandidate transpose(const HeffterCandidate& c);
HeffterCandidate negate(const HeffterCandidate& c);

}  // namespace heffter
