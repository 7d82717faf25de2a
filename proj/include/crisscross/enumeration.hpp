#pragma once

// Exhaustive tools for small parameters: code-size counting, codeword
// enumeration and deletion-ball disjointness checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "crisscross/code.hpp"

namespace crisscross::enumeration {

/// Upper limit on candidates any enumeration here will evaluate.
inline constexpr std::uint64_t kCandidateCap = 100'000'000;

enum class CountMode { formula, bruteforce };

struct CodeSize {
    BigInt size;
    std::optional<std::size_t> first_rows;   ///< |A_U| (formula mode)
    std::optional<std::size_t> last_columns; ///< |A_V| (formula mode)
    /// n^2 - floor(log_q |C|); absent for an empty code.
    std::optional<long long> code_redundancy;

    [[nodiscard]] bool empty() const { return size == 0; }
};

/// All words of length n that can be the first row of a codeword.
[[nodiscard]] std::vector<Sequence> valid_first_rows(std::size_t n, Symbol q);
/// All words of length n that can be the reversed last column of a codeword.
[[nodiscard]] std::vector<Sequence> valid_reversed_last_columns(std::size_t n, Symbol q);

/// formula: |A_U| * |A_V| * q^((n-2)^2 - 2). bruteforce: test every n x n array.
[[nodiscard]] CodeSize count_code_size(const CodeParams& p, CountMode mode);

/// Every n x n array passing the membership test; q^(n^2) must be within the cap.
[[nodiscard]] std::vector<CodeArray> brute_force_codewords(const CodeParams& p);

/// Uniformly random codeword assembled from a first row, a last column and
/// free interior entries. Returns nullopt for an empty code.
[[nodiscard]] std::optional<CodeArray> random_codeword(const CodeParams& p, std::span<const Sequence> first_rows,
                                                       std::span<const Sequence> last_columns,
                                                       std::mt19937_64& rng);

/// Every codeword whose deletion ball contains y. Candidates are generated
/// from the all-zero row/column sums that every codeword satisfies.
[[nodiscard]] std::vector<CodeArray> codewords_explaining(const ReceivedArray& y, const CodeParams& p);

/// Number of unordered pairs of distinct arrays with intersecting deletion balls.
[[nodiscard]] std::uint64_t count_ball_intersections(std::span<const CodeArray> arrays);

[[nodiscard]] std::size_t floor_log(const BigInt& value, Symbol base);

} // namespace crisscross::enumeration
