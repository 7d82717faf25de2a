#pragma once

// Encoder redundancy of the criss-cross code against the known bounds:
//   r_enc = 4n - 2 - k3
//   lower = 2n + 2 log_q n - 3
//   upper = 2n + 2 log_q n + (2n - 13) log_q(q / (q-1)) + 12

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "crisscross/code.hpp"

namespace crisscross::analysis {

/// Absolute slack for the floating-point bound comparisons.
inline constexpr double kBoundSlack = 1e-9;

/// Largest n accepted by analyze().
inline constexpr std::size_t kMaxAnalysisN = 4096;

struct AnalysisRow {
    std::size_t n = 0;
    Symbol q = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t k3 = 0;
    std::size_t message_length = 0;
    long long encoder_redundancy = 0;
    double lower_bound = 0;
    double upper_bound = 0;
    double gap = 0; ///< encoder_redundancy - lower_bound

    [[nodiscard]] bool meets_upper_bound() const noexcept;
    [[nodiscard]] bool meets_lower_bound() const noexcept;
};

[[nodiscard]] double lower_bound(std::size_t n, Symbol q);
[[nodiscard]] double upper_bound(std::size_t n, Symbol q);

[[nodiscard]] AnalysisRow analyze_point(const CodeParams& p, const CodecOptions& options = {});

/// Rows for every n in [n_min, n_max] and every q, n-major.
[[nodiscard]] std::vector<AnalysisRow> analyze(std::size_t n_min, std::size_t n_max, std::span<const Symbol> qs,
                                               const CodecOptions& options = {});

[[nodiscard]] std::string format_csv(std::span<const AnalysisRow> rows);
[[nodiscard]] std::string format_table(std::span<const AnalysisRow> rows);

} // namespace crisscross::analysis
