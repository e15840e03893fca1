#pragma once

#include <cstdint>
#include <string>

namespace hydro {

enum class CheckMode { Auto, Symbolic, Sampled };

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// How identities with rational-function entries are decided. Symbolic mode
/// clears denominators and tests numerators exactly; sampled mode evaluates
/// second-order jets at seeded random rational points. Polynomial identities
/// are always decided symbolically.
struct CheckOptions {
    CheckMode mode = CheckMode::Auto;
    std::uint64_t seed = kDefaultSeed;
    int samples = 20;
    /// Auto resolves to symbolic up to this many components.
    int symbolic_max_n = 5;

    CheckMode resolve(int n) const {
        if (mode != CheckMode::Auto)
            return mode;
        return n <= symbolic_max_n ? CheckMode::Symbolic : CheckMode::Sampled;
    }
};

inline std::string mode_name(CheckMode m) {
    switch (m) {
    case CheckMode::Symbolic:
        return "symbolic";
    case CheckMode::Sampled:
        return "sampled";
    case CheckMode::Auto:
        break;
    }
    return "auto";
}

} // namespace hydro
