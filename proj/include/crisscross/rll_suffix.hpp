#pragma once

// q-ary 1-RLL Differential VT code with suffix constraint.
//
// Words x of length n+m with Syn(Diff(x)) == a (mod q(n+m)), no two equal
// neighbours, and last m symbols equal to a fixed suffix b. The encoder
// stores n-t-4 data symbols over Z_{q-1} in the differential vector, where
// t = floor(log_{q-1} n), and spends the remaining body positions steering
// the syndrome.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crisscross/dvt.hpp"
#include "crisscross/sequence.hpp"

namespace crisscross::rll {

struct Params {
    std::size_t n = 8; ///< body length
    std::size_t m = 1; ///< suffix length
    Symbol q = 3;
    std::uint64_t a = 0; ///< residue in [0, q(n+m))
    std::vector<Symbol> suffix;

    void validate() const;
    [[nodiscard]] dvt::Params dvt_params() const { return {n + m, q, a}; }
};

/// Position classes of the differential vector (1-based, ascending).
struct IndexSets {
    unsigned t = 0;
    std::vector<std::size_t> powers;   ///< (q-1)^i for 0 <= i <= t
    std::vector<std::size_t> steering; ///< j1 < j2 < j3, largest non-powers
    std::vector<std::size_t> data;     ///< everything else
};

struct EncodeOptions {
    /// Accept n < 8 or m > 3; the output is then checked against is_member.
    bool allow_unproven_parameters = false;
};

/// Intermediate values of one encode call.
struct EncodeTrace {
    IndexSets sets;
    std::uint64_t g1 = 0;
    std::array<std::uint64_t, 3> e{};
    std::uint64_t g4 = 0;
    std::vector<Symbol> h; ///< base-(q-1) digits of g4, least significant first
    Sequence differential{std::vector<Symbol>{}, 2};
};

/// `relaxed` lowers the requirement from n >= 8 to n >= t + 5.
[[nodiscard]] IndexSets index_sets(std::size_t n, Symbol q, bool relaxed = false);

/// n - t - 4.
[[nodiscard]] std::size_t data_length(std::size_t n, Symbol q, bool relaxed = false);

[[nodiscard]] Sequence encode(std::span<const Symbol> data, const Params& p,
                              const EncodeOptions& options = {}, EncodeTrace* trace = nullptr);

[[nodiscard]] bool is_member(const Sequence& x, const Params& p);

/// Single-deletion decoding with exact position (1-based).
[[nodiscard]] dvt::DeletionDecodeResult decode(const Sequence& received, const Params& p);

[[nodiscard]] std::vector<Symbol> recover_data(const Sequence& x, const Params& p,
                                               bool allow_unproven_parameters = false);

} // namespace crisscross::rll
