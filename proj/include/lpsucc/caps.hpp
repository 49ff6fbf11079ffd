#pragma once

#include <cstddef>

namespace lpsucc {

/// Limits for exhaustive enumeration.
struct EnumerationCaps {
    /// Largest signature enumerated over 2^n interpretations. Hard-limited to 62.
    std::size_t max_vars = 20;
    /// Largest number of loops returned by loop enumeration.
    std::size_t max_loops = 1'000'000;

    /// Defaults overridden by LPSUCC_MAX_VARS / LPSUCC_MAX_LOOPS when set.
    static EnumerationCaps from_env();
};

inline constexpr std::size_t kHardMaxVars = 62;

/// Throws CapExceeded if n cannot be enumerated under caps.
void require_enumerable(std::size_t n, const EnumerationCaps& caps);

} // namespace lpsucc
