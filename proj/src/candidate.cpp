#include "heffter/candidate.hpp"

#include <cstdlib>
#include <stdexcept>

namespace heffter {

HeffterCandidate::HeffterCandidate(Grid g) : grid_(std::move(g)) {
    if (grid_.rows() < 1 || grid_.cols() < 1) throw std::invalid_argument("candidate: empty grid");
    // Keep 2mn+1 and all line sums comfortably inside 64 bits.
    if (grid_.size() > (std::int64_t{1} << 30)) throw std::invalid_argument("candidate: dimensions too large");
    const Entry bound = grid_.size();
    for (Entry e : grid_.entries()) {
        if (e == 0) throw std::invalid_argument("candidate: zero entry");
        if (std::llabs(e) > bound) throw std::invalid_argument("candidate: entry outside canonical range");
    }
}

HeffterCandidate transpose(const HeffterCandidate& c) { return HeffterCandidate(transpose(c.grid())); }

HeffterCandidate negate(const HeffterCandidate& c) { return HeffterCandidate(negate(c.grid())); }

}  // namespace heffter
