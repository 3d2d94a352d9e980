#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cl30 {

struct IdentityCheck {
    std::string name;
    bool passed;
    double max_error;
    double tolerance;
};

/// Runs the built-in identity regression suite behind `cl30 verify`.
/// `match_tol` is the group-element matching tolerance.
std::vector<IdentityCheck> run_identity_suite(double match_tol, std::uint64_t seed = 20260415);

}  // namespace cl30
