#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isofactor {

enum ExitCode : int {
    kExitHolds = 0,     // property holds / construction succeeded
    kExitFails = 1,     // property fails; a witness is reported
    kExitUsage = 2,     // bad flags or malformed input
    kExitCapacity = 3,  // an exhaustive bound was exceeded
    kExitInternal = 4,  // a result contradicted a proven statement
};

/// args excludes the program name. Graph input is read from the positional
/// path, or from `in` when the path is "-" or omitted.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isofactor
