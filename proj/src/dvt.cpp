#include "crisscross/dvt.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "crisscross/errors.hpp"

namespace crisscross::dvt {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Arithmetic modulo M < 2^62: every product below is index * symbol with
// index <= n and symbol < q, so it stays below M.
struct Mod {
    std::uint64_t m;
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const auto s = a + b;
        return s >= m ? s - m : s;
    }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + m - b;
    }
    [[nodiscard]] std::uint64_t mul(std::uint64_t index, std::uint64_t value) const noexcept {
        return (index * value) % m;
    }
};

Symbol mod_sub(Symbol a, Symbol b, Symbol q) noexcept {
    return a >= b ? a - b : a + q - b;
}

void check_alphabet(const Sequence& s, const Params& p) {
    if (s.q() != p.q) {
        throw InvalidArgument("sequence alphabet q=" + std::to_string(s.q()) +
                              " does not match code alphabet q=" + std::to_string(p.q));
    }
}

struct Candidate {
    std::size_t position; // 1-based
    Symbol symbol;
};

// Every distinct single-insertion supersequence of `r` (length n-1) whose
// differential syndrome is a mod qn. Insertions are taken in canonical form
// (position is the first index of the symbol's run), so distinct candidates
// are distinct words. For each position the syndrome is s + const on at most
// three intervals of s, so the congruence is solved directly for s.
std::vector<Candidate> insertion_candidates(std::span<const Symbol> r, const Params& p,
                                            bool adjacent_distinct_only) {
    const std::size_t n = p.n;
    const Symbol q = p.q;
    const Mod mod{p.modulus()};

    // d[i] (1-based, i < n-1) = r_i - r_{i+1} mod q, d[n-1] = r_{n-1}.
    std::vector<Symbol> d(n, 0);
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        d[i] = mod_sub(r[i - 1], r[i], q);
    }
    if (n >= 2) {
        d[n - 1] = r[n - 2];
    }
    // prefix[k] = sum_{i<=k} i*d_i for k <= n-2; suffix[k] = sum_{i>=k} (i+1)*d_i.
    std::vector<std::uint64_t> prefix(n, 0), suffix(n + 1, 0);
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        prefix[i] = mod.add(prefix[i - 1], mod.mul(i, d[i]));
    }
    for (std::size_t i = n - 1; i >= 1; --i) {
        suffix[i] = mod.add(suffix[i + 1], mod.mul(i + 1, d[i]));
    }

    std::size_t equal_pairs = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        equal_pairs += r[i - 1] == r[i] ? 1 : 0;
    }

    std::vector<Candidate> out;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const bool has_left = pos >= 2;
        const bool has_right = pos <= n - 1;
        const Symbol left = has_left ? r[pos - 2] : 0;
        const Symbol right = has_right ? r[pos - 1] : 0;
        const std::uint64_t base = mod.add(pos >= 2 ? prefix[pos - 2] : 0, suffix[pos]);

        auto syndrome_at = [&](Symbol s) {
            std::uint64_t v = base;
            if (has_left) {
                v = mod.add(v, mod.mul(pos - 1, mod_sub(left, s, q)));
            }
            v = mod.add(v, has_right ? mod.mul(pos, mod_sub(s, right, q)) : mod.mul(n, s));
            return v;
        };

        if (adjacent_distinct_only) {
            const bool bridged_pair_equal = has_left && has_right && left == right;
            if (equal_pairs - (bridged_pair_equal ? 1 : 0) != 0) {
                continue;
            }
        }

        std::array<Symbol, 3> starts{0, q, q};
        std::size_t count = 1;
        if (has_left && left + 1 < q) {
            starts[count++] = left + 1;
        }
        if (has_right && right > 0) {
            starts[count++] = right;
        }
        std::sort(starts.begin(), starts.begin() + static_cast<std::ptrdiff_t>(count));
        const auto last = std::unique(starts.begin(), starts.begin() + static_cast<std::ptrdiff_t>(count));
        count = static_cast<std::size_t>(last - starts.begin());

        for (std::size_t k = 0; k < count; ++k) {
            const Symbol lo = starts[k];
            const Symbol hi = k + 1 < count ? starts[k + 1] - 1 : q - 1;
            const std::uint64_t offset = mod.sub(syndrome_at(lo), lo);
            const std::uint64_t s = mod.sub(p.a, offset);
            if (s < lo || s > hi) {
                continue;
            }
            const auto symbol = static_cast<Symbol>(s);
            if (has_left && symbol == left) {
                continue; // same word as inserting one position earlier
            }
            if (adjacent_distinct_only && has_right && symbol == right) {
                continue;
            }
            out.push_back({pos, symbol});
        }
    }
    return out;
}

DeletionDecodeResult decode_deletion_impl(const Sequence& received, const Params& p, bool rll) {
    p.validate();
    check_alphabet(received, p);
    if (p.n < 2) {
        throw InvalidArgument("deletion decoding needs n >= 2");
    }
    if (received.size() != p.n - 1) {
        throw InvalidArgument("received length " + std::to_string(received.size()) +
                              " but expected n-1 = " + std::to_string(p.n - 1));
    }
    const auto candidates = insertion_candidates(received.symbols(), p, rll);
    if (candidates.empty()) {
        throw NoCandidate("no codeword of Diff_VT_" + std::to_string(p.a) + "(" +
                          std::to_string(p.n) + ";" + std::to_string(p.q) + ")" +
                          (rll ? " with distinct neighbours" : "") + " contains " +
                          received.to_string() + " in its deletion ball");
    }
    if (candidates.size() > 1) {
        throw AmbiguousCodeword("received word " + received.to_string() + " is explained by " +
                                std::to_string(candidates.size()) + " codewords");
    }
    const auto& c = candidates.front();
    auto codeword = received.with_insertion(c.position, c.symbol);
    if (!is_dvt_member(codeword, p)) {
        throw InternalError("deletion decoder produced a non-member " + codeword.to_string());
    }
    return {std::move(codeword), c.position};
}

} // namespace

std::uint64_t Params::modulus() const {
    validate();
    return static_cast<std::uint64_t>(q) * n;
}

void Params::validate() const {
    require_alphabet(q);
    if (n < 1) {
        throw InvalidArgument("code length n must be at least 1");
    }
    if (n > kMaxModulus / q) {
        throw InvalidArgument("q*n exceeds the supported range");
    }
    if (a >= static_cast<std::uint64_t>(q) * n) {
        throw InvalidArgument("syndrome residue a=" + std::to_string(a) + " must lie in [0, q*n)");
    }
}

Sequence diff(const Sequence& x) {
    if (x.empty()) {
        throw InvalidArgument("diff of an empty sequence");
    }
    const Symbol q = x.q();
    std::vector<Symbol> y(x.size());
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        y[i] = mod_sub(x[i], x[i + 1], q);
    }
    y.back() = x[x.size() - 1];
    return Sequence(std::move(y), q);
}

Sequence diff_inverse(const Sequence& y) {
    if (y.empty()) {
        throw InvalidArgument("diff_inverse of an empty sequence");
    }
    const Symbol q = y.q();
    std::vector<Symbol> x(y.size());
    x.back() = y[y.size() - 1];
    for (std::size_t i = y.size() - 1; i-- > 0;) {
        const auto s = static_cast<std::uint64_t>(y[i]) + x[i + 1];
        x[i] = static_cast<Symbol>(s % q);
    }
    return Sequence(std::move(x), q);
}

BigInt syndrome(const Sequence& y) {
    if (y.empty()) {
        throw InvalidArgument("syndrome of an empty sequence");
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        total += BigInt(i + 1) * y[i];
    }
    return total;
}

std::uint64_t differential_syndrome_mod(std::span<const Symbol> x, Symbol q,
                                        std::uint64_t modulus) noexcept {
    const Mod mod{modulus};
    std::uint64_t total = 0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        total = mod.add(total, mod.mul(i + 1, mod_sub(x[i], x[i + 1], q)));
    }
    if (n > 0) {
        total = mod.add(total, mod.mul(n, x[n - 1]));
    }
    return total;
}

bool is_dvt_member(const Sequence& x, const Params& p) {
    const auto m = p.modulus();
    check_alphabet(x, p);
    if (x.size() != p.n) {
        throw InvalidArgument("sequence length " + std::to_string(x.size()) +
                              " does not match code length " + std::to_string(p.n));
    }
    return differential_syndrome_mod(x.symbols(), p.q, m) == p.a;
}

DeletionDecodeResult decode_deletion(const Sequence& received, const Params& p) {
    return decode_deletion_impl(received, p, false);
}

DeletionDecodeResult decode_rll_deletion(const Sequence& received, const Params& p) {
    return decode_deletion_impl(received, p, true);
}

Sequence decode_insertion(const Sequence& received, const Params& p) {
    p.validate();
    check_alphabet(received, p);
    const std::size_t n = p.n;
    if (received.size() != n + 1) {
        throw InvalidArgument("received length " + std::to_string(received.size()) +
                              " but expected n+1 = " + std::to_string(n + 1));
    }
    const Symbol q = p.q;
    const Mod mod{p.modulus()};
    const auto r = received.symbols();

    // d[i] (1-based) = r_i - r_{i+1} mod q for i <= n, d[n+1] = r_{n+1}.
    std::vector<Symbol> d(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        d[i] = mod_sub(r[i - 1], r[i], q);
    }
    d[n + 1] = r[n];
    // prefix[k] = sum_{i<=k} i*d_i; tail[k] = sum_{i>=k} (i-1)*d_i.
    std::vector<std::uint64_t> prefix(n + 2, 0), tail(n + 3, 0);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        prefix[i] = mod.add(prefix[i - 1], mod.mul(i, d[i]));
    }
    for (std::size_t i = n + 1; i >= 2; --i) {
        tail[i] = mod.add(tail[i + 1], mod.mul(i - 1, d[i]));
    }

    std::optional<std::size_t> found;
    std::size_t matches = 0;
    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
        if (pos >= 2 && r[pos - 2] == r[pos - 1]) {
            continue; // same word as removing the first symbol of this run
        }
        std::uint64_t s = pos >= 2 ? prefix[pos - 2] : 0;
        if (pos >= 2) {
            const std::uint64_t joined = pos <= n ? mod_sub(r[pos - 2], r[pos], q) : r[pos - 2];
            s = mod.add(s, mod.mul(pos - 1, joined));
        }
        s = mod.add(s, tail[pos + 1]);
        if (s == p.a) {
            ++matches;
            found = pos;
        }
    }
    if (matches == 0) {
        throw NoCandidate("no codeword of Diff_VT_" + std::to_string(p.a) + "(" +
                          std::to_string(n) + ";" + std::to_string(q) + ") explains " +
                          received.to_string());
    }
    if (matches > 1) {
        throw AmbiguousCodeword("received word " + received.to_string() + " is explained by " +
                                std::to_string(matches) + " codewords");
    }
    auto codeword = received.with_deletion(*found);
    if (!is_dvt_member(codeword, p)) {
        throw InternalError("insertion decoder produced a non-member " + codeword.to_string());
    }
    return codeword;
}

} // namespace crisscross::dvt
