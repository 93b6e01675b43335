#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhe::cli {

// Parses and routes one invocation.  Exit codes: 0 success, 1 usage error,
// 2 parameter validation error, 3 verification ledger failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace qhe::cli
