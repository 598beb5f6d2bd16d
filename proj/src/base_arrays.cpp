#include "heffter/base_arrays.hpp"

namespace heffter::base {

namespace {

#include "base_arrays_data.inc"

}  // namespace

const Grid& h3x3() { return kH33; }
const Grid& h3x4() { return kH34; }
const Grid& h4x4() { return kH44; }
const Grid& h4x6() { return kH46; }
const Grid& h6x6() { return kH66; }
const Grid& h5x4() { return kH54; }
const Grid& h5x5() { return kH55; }
const Grid& h5x6() { return kH56; }

}  // namespace heffter::base
