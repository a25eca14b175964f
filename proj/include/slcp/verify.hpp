#pragma once

// Oracle-equivalence suite: every structure built from a text is compared
// position by position with the brute-force reference, and the structural
// identities (run counts, value-class sums, walk and step bounds) are checked.

#include <cstdint>
#include <string>
#include <vector>

#include "slcp/common.hpp"
#include "slcp/oracle.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    size_type sample_rate = 4;
    OracleLimits limits;
    size_type patterns = 1000;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool passed() const;
    size_type failures() const;
};

/// Throws LimitExceeded when the text is beyond the oracle limits.
VerifyReport verify_text(const Text& text, const VerifyOptions& options = {});

}  // namespace slcp
