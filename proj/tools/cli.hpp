#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cl30::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kUnknownLabel = 3,
    kMalformedInput = 4,
    kNonPlanarVector = 5,
    kMixedBraKetChain = 6,
    kInvalidArgument = 7,
};

/// Runs one command.  `args` excludes the program name.  `tol_override` is
/// the raw CL30_TOL value, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& tol_override = std::nullopt);

}  // namespace cl30::cli
