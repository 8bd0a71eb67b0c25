#pragma once

#include <cstdlib>
#include <string>

namespace grasscount {

inline constexpr const char* kVersion = "0.1.0";

namespace detail {

inline long env_long(const char* name, long fallback, long lo, long hi) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw) return fallback;
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    return v;
}

}  // namespace detail

/// Working precision for high-precision constants, in decimal digits.
/// Controlled by GRASSCOUNT_PRECISION (default 50).
inline unsigned precision_digits() {
    static const long v = detail::env_long("GRASSCOUNT_PRECISION", 50, 30, 10000);
    return static_cast<unsigned>(v);
}

/// Dimension cap for exact minima / enumeration work.
/// Controlled by GRASSCOUNT_CAP_N (default 8).
inline unsigned dimension_cap() {
    static const long v = detail::env_long("GRASSCOUNT_CAP_N", 8, 1, 24);
    return static_cast<unsigned>(v);
}

/// Budgets for the exact enumeration kernels. Counting operations throw
/// capacity_error instead of silently degrading when a budget is exceeded.
struct EnumerationLimits {
    std::size_t max_vectors = 4'000'000;  // ball vectors kept per enumeration
    unsigned threads = 1;                 // workers for the subset loop
};

}  // namespace grasscount
