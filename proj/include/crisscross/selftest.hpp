#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crisscross/code.hpp"

namespace crisscross::selftest {

struct Options {
    std::size_t n = 12;
    Symbol q = 5;
    std::size_t trials = 50;
    bool exhaustive_small = false;
    std::uint64_t seed = 1;
    bool allow_unproven_parameters = false;
    /// Applied to every decoded array before comparison. Test hook.
    std::function<void(CodeArray&)> post_decode_hook;
};

struct Report {
    bool passed = true;
    std::vector<std::string> log;
    std::optional<std::string> reproducer; ///< set on the first failure
    double seconds = 0;
};

/// Random end-to-end trials over every deletion position, plus the small
/// exhaustive suites when requested.
[[nodiscard]] Report run(const Options& options);

} // namespace crisscross::selftest
