#pragma once

// q-ary (1,1)-criss-cross deletion correcting code.
//
// An n x n array X is a codeword when
//   1. its first row U is a 1-RLL Differential VT word with syndrome 0 ending in (0, 2);
//   2. its reversed last column V is one ending in (0, 1, 2);
//   3. X[2][n-1] = 1 and X[3][n-1] = 2;
//   4. rows 2..n sum to 0 mod q;
//   5. columns 2..n-1 sum to 0 mod q.
// Every row and column of a codeword then sums to 0 mod q, which is what the
// decoder uses to refill a deleted row and column. Row/column numbers in this
// header are 1-based.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crisscross/rll_suffix.hpp"
#include "crisscross/sequence.hpp"
#include "crisscross/symbol_matrix.hpp"

namespace crisscross {

struct CodeParams {
    std::size_t n = 11;
    Symbol q = 3;

    /// n >= 4, q >= 3.
    void validate() const;
};

using CodeArray = SymbolMatrix;

/// An (n-1) x (n-1) array together with the dimension of the array it came from.
struct ReceivedArray {
    SymbolMatrix entries;
    std::size_t n = 0;
};

struct MembershipReport {
    int violated_condition = 0; ///< 0 when every condition holds
    std::string detail;
    [[nodiscard]] bool ok() const noexcept { return violated_condition == 0; }
};

struct MessageLengths {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t k3 = 0;
    std::size_t total = 0; ///< n^2 - 4n + 2 + k3
};

struct CodecOptions {
    /// Permit 8 <= n < 11 for encoding and data recovery. Encoder output is
    /// always validated in this mode.
    bool allow_unproven_parameters = false;
};

struct EncodeTrace {
    MessageLengths lengths;
    BigInt h;
    std::vector<Symbol> digits; ///< base-(q-1) digits a_1..a_{k1+k2}
    Sequence first_row{std::vector<Symbol>{}, 2};
    Sequence reversed_last_column{std::vector<Symbol>{}, 2};
};

struct DecodeTrace {
    Symbol corner_top = 0;    ///< Y[1][n-1]
    Symbol corner_second = 0; ///< Y[2][n-1]
    bool last_column_deleted = false;
    std::vector<Symbol> restored_last_column;
    Sequence reversed_last_column{std::vector<Symbol>{}, 2}; ///< V'
    std::size_t deleted_row = 0;                             ///< i*
    std::vector<Symbol> restored_row;                        ///< r
    std::optional<std::size_t> deleted_column;               ///< j*
    std::vector<Symbol> restored_column;                     ///< c
};

/// Parameters of the 1-D code carried by the first row: (n-2, 2, q, 0, (0,2)).
[[nodiscard]] rll::Params first_row_params(std::size_t n, Symbol q);
/// Parameters of the 1-D code carried by the reversed last column: (n-3, 3, q, 0, (0,1,2)).
[[nodiscard]] rll::Params last_column_params(std::size_t n, Symbol q);

/// Index (1..5) of the first violated condition, 0 for a codeword.
/// Allocation-free; used by the exhaustive enumerators.
[[nodiscard]] int first_violated_condition(const CodeArray& x, const CodeParams& p);

[[nodiscard]] MembershipReport check_codeword(const CodeArray& x, const CodeParams& p);
[[nodiscard]] bool is_codeword(const CodeArray& x, const CodeParams& p);

/// Every row sum and every column sum vanishes mod q.
[[nodiscard]] bool check_zero_sums(const CodeArray& x, const CodeParams& p);

/// Deletes row `row` and column `col` (1-based).
[[nodiscard]] ReceivedArray corrupt(const CodeArray& x, std::size_t row, std::size_t col);

/// All distinct results of one criss-cross deletion.
[[nodiscard]] std::set<SymbolMatrix> deletion_ball(const SymbolMatrix& x);

[[nodiscard]] MessageLengths message_lengths(const CodeParams& p, const CodecOptions& options = {});

[[nodiscard]] CodeArray encode(std::span<const Symbol> data, const CodeParams& p,
                               const CodecOptions& options = {}, EncodeTrace* trace = nullptr);

/// Reconstructs the codeword from a single criss-cross deletion.
/// Throws NotDecodable when the input is not in any codeword's ball.
[[nodiscard]] CodeArray decode(const ReceivedArray& y, const CodeParams& p, DecodeTrace* trace = nullptr);

[[nodiscard]] std::vector<Symbol> recover_data(const CodeArray& x, const CodeParams& p,
                                               const CodecOptions& options = {}, BigInt* h = nullptr);

} // namespace crisscross
