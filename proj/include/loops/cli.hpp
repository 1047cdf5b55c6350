#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loops::cli {

/// Runs one CLI invocation. Exit codes: 0 success / all requested
/// properties hold / no theorem violated; 1 a requested property is false
/// or a swept theorem is violated; 2 usage, parse, or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace loops::cli
