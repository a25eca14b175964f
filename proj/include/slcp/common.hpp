#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace slcp {

/// Text positions, SA positions, counts and LCP values. Positions are 1-based
/// throughout the library, matching the usual SA/LCP notation.
using size_type = std::uint64_t;

/// Internal symbol rank. Rank 0 is the terminator.
using Symbol = std::uint32_t;

inline constexpr Symbol kTerminator = 0;

/// Marker for "no extra samples" in the sampled LCP construction.
inline constexpr size_type kUnbounded = std::numeric_limits<size_type>::max();

/// Malformed or truncated serialized data, including checksum mismatches.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds a configured brute-force limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural identity that must hold on every input was violated.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Per-call instrumentation. Never shared between callers.
struct StepCounter {
    size_type psi = 0;
    size_type comparisons = 0;
};

}  // namespace slcp
