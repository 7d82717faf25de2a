#pragma once

// q-ary Differential VT codes: the differential transform, the VT syndrome,
// membership, and single deletion / insertion decoding.
//
// A word x of length n belongs to Diff_VT_a(n; q) when
//   sum_i i * Diff(x)_i == a  (mod q*n),
// where Diff(x)_i = x_i - x_{i+1} mod q for i < n and Diff(x)_n = x_n.

#include <cstddef>
#include <cstdint>

#include "crisscross/sequence.hpp"

namespace crisscross::dvt {

struct Params {
    std::size_t n = 1;
    Symbol q = 2;
    std::uint64_t a = 0; ///< residue in [0, q*n)

    /// q*n. Throws InvalidArgument if the parameters are out of range.
    [[nodiscard]] std::uint64_t modulus() const;
    void validate() const;
};

struct DeletionDecodeResult {
    Sequence codeword;
    std::size_t position = 0; ///< 1-based index of the deleted symbol
};

[[nodiscard]] Sequence diff(const Sequence& x);
[[nodiscard]] Sequence diff_inverse(const Sequence& y);

/// Exact sum_i i*y_i, no modular reduction.
[[nodiscard]] BigInt syndrome(const Sequence& y);

/// Syn(Diff(x)) mod `modulus` without materialising Diff(x).
[[nodiscard]] std::uint64_t differential_syndrome_mod(std::span<const Symbol> x, Symbol q,
                                                      std::uint64_t modulus) noexcept;

[[nodiscard]] bool is_dvt_member(const Sequence& x, const Params& p);

/// Recovers the codeword from a single deletion. When the deleted symbol
/// sat in a run, `position` is the first index of that run.
[[nodiscard]] DeletionDecodeResult decode_deletion(const Sequence& received, const Params& p);

/// Recovers the codeword from a single insertion.
[[nodiscard]] Sequence decode_insertion(const Sequence& received, const Params& p);

/// Deletion decoding restricted to codewords whose neighbouring symbols all
/// differ. The reported position is exact.
[[nodiscard]] DeletionDecodeResult decode_rll_deletion(const Sequence& received, const Params& p);

} // namespace crisscross::dvt
