#pragma once

#include <cstdlib>
#include <optional>
#include <string>

#include "pgt/error.hpp"

namespace pgt {

// Default ceilings for the exponential sweeps. PG_SIZE_GUARD, when set to an
// integer, replaces all of them at once.
inline constexpr std::size_t kPowersetGuard = 25;    // powerset, perfectness sweep
inline constexpr std::size_t kHoleSearchGuard = 12;  // odd-hole / anti-hole subset scan
inline constexpr std::size_t kIsoSearchGuard = 10;   // isomorphism backtracking
inline constexpr std::size_t kReplicationGuard = 7;  // replication-lemma check
inline constexpr std::size_t kEnumerationGuard = 7;  // labeled-graph enumeration

inline std::optional<std::size_t> size_guard_override() {
    static const std::optional<std::size_t> value = []() -> std::optional<std::size_t> {
        const char* raw = std::getenv("PG_SIZE_GUARD");
        if (raw == nullptr || *raw == '\0') return std::nullopt;
        char* end = nullptr;
        const long long parsed = std::strtoll(raw, &end, 10);
        if (end == nullptr || *end != '\0' || parsed < 0) return std::nullopt;
        return static_cast<std::size_t>(parsed);
    }();
    return value;
}

inline std::size_t effective_guard(std::size_t default_limit) {
    if (auto override_value = size_guard_override()) return *override_value;
    return default_limit;
}

inline void require_within_guard(std::size_t actual, std::size_t default_limit, const char* operation) {
    const std::size_t limit = effective_guard(default_limit);
    if (actual > limit) {
        throw SizeLimitError(std::string(operation) + ": size " + std::to_string(actual) +
                             " exceeds guard " + std::to_string(limit));
    }
}

} // namespace pgt
