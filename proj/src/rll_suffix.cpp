#include "crisscross/rll_suffix.hpp"

#include <algorithm>
#include <string>

#include "crisscross/errors.hpp"

namespace crisscross::rll {

namespace {

std::string describe(const Params& p) {
    std::string s = "(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) +
                    ", q=" + std::to_string(p.q) + ", a=" + std::to_string(p.a) + ", b=(";
    for (std::size_t i = 0; i < p.suffix.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.suffix[i]);
    }
    return s + "))";
}

} // namespace

void Params::validate() const {
    require_alphabet(q, 3);
    if (m < 1) {
        throw InvalidArgument("suffix length m must be at least 1");
    }
    if (suffix.size() != m) {
        throw InvalidArgument("suffix has " + std::to_string(suffix.size()) +
                              " symbols but m=" + std::to_string(m));
    }
    for (auto b : suffix) {
        if (b >= q) {
            throw InvalidArgument("suffix symbol " + std::to_string(b) + " outside alphabet");
        }
    }
    if (!adjacent_distinct(suffix)) {
        throw InvalidArgument("suffix symbols must differ from their neighbours");
    }
    dvt_params().validate();
}

IndexSets index_sets(std::size_t n, Symbol q, bool relaxed) {
    require_alphabet(q, 3);
    if (n < 1) {
        throw InvalidArgument("body length n must be positive");
    }
    IndexSets sets;
    sets.t = floor_log(n, q - 1);
    if (!relaxed && n < 8) {
        throw InvalidArgument("body length n=" + std::to_string(n) +
                              " is below the proven encoder range n >= 8");
    }
    if (n < sets.t + 5) {
        throw InvalidArgument("body length n=" + std::to_string(n) +
                              " leaves no data positions for q=" + std::to_string(q));
    }
    std::vector<bool> is_power(n + 1, false);
    std::size_t power = 1;
    for (unsigned i = 0; i <= sets.t; ++i) {
        sets.powers.push_back(power);
        is_power[power] = true;
        power *= q - 1;
    }
    for (std::size_t i = n; i >= 1 && sets.steering.size() < 3; --i) {
        if (!is_power[i]) {
            sets.steering.push_back(i);
        }
    }
    std::reverse(sets.steering.begin(), sets.steering.end());
    const std::size_t j1 = sets.steering.front();
    for (std::size_t i = 1; i <= n; ++i) {
        if (!is_power[i] && i < j1) {
            sets.data.push_back(i);
        }
    }
    if (sets.steering.size() != 3 || sets.data.size() != n - sets.t - 4) {
        throw InternalError("index set sizes inconsistent for n=" + std::to_string(n));
    }
    return sets;
}

std::size_t data_length(std::size_t n, Symbol q, bool relaxed) {
    return index_sets(n, q, relaxed).data.size();
}

Sequence encode(std::span<const Symbol> data, const Params& p, const EncodeOptions& options,
                EncodeTrace* trace) {
    p.validate();
    const bool relaxed = options.allow_unproven_parameters;
    if (!relaxed && p.m > 3) {
        throw InvalidArgument("suffix length m=" + std::to_string(p.m) +
                              " is above the proven encoder range m <= 3");
    }
    auto sets = index_sets(p.n, p.q, relaxed);
    const std::size_t n = p.n;
    const std::size_t total = n + p.m;
    const Symbol q = p.q;
    if (data.size() != sets.data.size()) {
        throw InvalidArgument("expected " + std::to_string(sets.data.size()) +
                              " data symbols, got " + std::to_string(data.size()));
    }
    for (auto f : data) {
        if (f > q - 2) {
            throw InvalidArgument("data symbol " + std::to_string(f) + " outside Z_" +
                                  std::to_string(q - 1));
        }
    }
    const std::size_t j1 = sets.steering[0];
    if (!relaxed && j1 + 3 < n) {
        throw InternalError("steering index j1=" + std::to_string(j1) + " below n-3");
    }

    std::vector<Symbol> y(total, 0); // y[i-1] holds y_i
    for (std::size_t i = 0; i < sets.data.size(); ++i) {
        y[sets.data[i] - 1] = data[i] + 1;
    }
    for (std::size_t i = n + 1; i < total; ++i) {
        const Symbol b = p.suffix[i - n - 1];
        const Symbol next = p.suffix[i - n];
        y[i - 1] = b >= next ? b - next : b + q - next;
    }
    y[total - 1] = p.suffix.back();

    // g1 = a - sum_{suffix} i*y_i - sum_{K} i*y_i - sum_{R} i  mod q(n+m)
    const std::uint64_t modulus = p.dvt_params().modulus();
    std::uint64_t subtract = 0;
    auto accumulate = [&](std::uint64_t v) { subtract = (subtract + v % modulus) % modulus; };
    for (std::size_t i = n + 1; i <= total; ++i) {
        accumulate(static_cast<std::uint64_t>(i) * y[i - 1]);
    }
    for (auto k : sets.data) {
        accumulate(static_cast<std::uint64_t>(k) * y[k - 1]);
    }
    for (auto r : sets.powers) {
        accumulate(r);
    }
    for (auto r : sets.steering) {
        accumulate(r);
    }
    std::uint64_t g = (p.a + modulus - subtract) % modulus;
    const std::uint64_t g1 = g;

    std::array<std::uint64_t, 3> e{};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = sets.steering[i];
        e[i] = std::min<std::uint64_t>(q - 2, g / j);
        y[j - 1] = static_cast<Symbol>(e[i] + 1);
        g -= e[i] * j;
    }
    const std::uint64_t g4 = g;

    // g4 must fit in t+1 base-(q-1) digits.
    std::vector<Symbol> h(sets.t + 1, 0);
    std::uint64_t rest = g4;
    for (auto& digit : h) {
        digit = static_cast<Symbol>(rest % (q - 1));
        rest /= q - 1;
    }
    if (rest != 0) {
        const std::string msg = "g4=" + std::to_string(g4) + " exceeds (q-1)^(t+1)-1 for " +
                                describe(p);
        if (relaxed) {
            throw InvalidArgument(msg + " (parameters outside the proven range)");
        }
        throw InternalError(msg);
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        y[sets.powers[i] - 1] = h[i] + 1;
    }

    Sequence differential(std::move(y), q);
    auto x = dvt::diff_inverse(differential);
    if (!is_member(x, p)) {
        const std::string msg = "encoder output " + x.to_string() + " is not a member of " +
                                describe(p);
        if (relaxed) {
            throw InvalidArgument(msg + " (parameters outside the proven range)");
        }
        throw InternalError(msg);
    }
    if (trace) {
        trace->sets = std::move(sets);
        trace->g1 = g1;
        trace->e = e;
        trace->g4 = g4;
        trace->h = std::move(h);
        trace->differential = std::move(differential);
    }
    return x;
}

bool is_member(const Sequence& x, const Params& p) {
    p.validate();
    if (x.size() != p.n + p.m) {
        throw InvalidArgument("word length " + std::to_string(x.size()) + " but expected n+m=" +
                              std::to_string(p.n + p.m));
    }
    if (!std::equal(p.suffix.begin(), p.suffix.end(), x.symbols().end() - static_cast<std::ptrdiff_t>(p.m))) {
        return false;
    }
    return adjacent_distinct(x.symbols()) && dvt::is_dvt_member(x, p.dvt_params());
}

dvt::DeletionDecodeResult decode(const Sequence& received, const Params& p) {
    p.validate();
    auto result = dvt::decode_rll_deletion(received, p.dvt_params());
    if (!is_member(result.codeword, p)) {
        throw NoCandidate("decoded word " + result.codeword.to_string() +
                          " does not end with the suffix of " + describe(p));
    }
    return result;
}

std::vector<Symbol> recover_data(const Sequence& x, const Params& p, bool allow_unproven_parameters) {
    if (!is_member(x, p)) {
        throw NotACodeword(x.to_string() + " is not a member of " + describe(p));
    }
    const auto sets = index_sets(p.n, p.q, allow_unproven_parameters);
    const auto y = dvt::diff(x);
    std::vector<Symbol> data;
    data.reserve(sets.data.size());
    for (auto k : sets.data) {
        if (y[k - 1] == 0) {
            throw NotACodeword("differential symbol at data position " + std::to_string(k) +
                               " is zero; word is not an encoder output");
        }
        data.push_back(y[k - 1] - 1);
    }
    return data;
}

} // namespace crisscross::rll
