#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdepth/decomp.hpp"

namespace coxdepth {

enum class Suite { all, core, bijection, oracle, patterns };

std::optional<Suite> parse_suite(std::string_view text);

inline constexpr int kMaxVerifyN = 8;

struct VerifyReport {
    std::vector<CheckEntry> checks;
    // informational lines that never affect the outcome
    std::vector<std::string> notes;

    bool all_passed() const;
};

// Runs the exhaustive property suites over S_1 ... S_n (and the matching B and
// I2 backends for the oracle suite). Throws CapExceeded for n outside 1..8.
VerifyReport run_verification(int n, Suite suite);

}  // namespace coxdepth
