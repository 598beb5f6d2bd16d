#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heffter {

/// Entry point behind the `heffter` binary; exposed so tests can drive the
/// command surface in-process. args excludes argv[0].
/// Exit codes: 0 success, 1 infeasible request or failed verification,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heffter
