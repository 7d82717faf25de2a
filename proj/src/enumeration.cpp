#include "crisscross/enumeration.hpp"

#include <map>
#include <set>
#include <string>

#include "crisscross/errors.hpp"
#include "crisscross/rll_suffix.hpp"

namespace crisscross::enumeration {

namespace {

// q^exponent, or nullopt if it exceeds the cap.
std::optional<std::uint64_t> capped_power(Symbol q, std::size_t exponent) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (v > kCandidateCap / q) {
            return std::nullopt;
        }
        v *= q;
    }
    return v;
}

std::vector<Sequence> words_in(const rll::Params& params, std::size_t length, Symbol q) {
    if (!capped_power(q, length)) {
        throw InvalidArgument("q^n = " + std::to_string(q) + "^" + std::to_string(length) +
                              " exceeds the enumeration cap of " + std::to_string(kCandidateCap));
    }
    std::vector<Sequence> out;
    std::vector<Symbol> word(length, 0);
    while (true) {
        Sequence s(word, q);
        if (rll::is_member(s, params)) {
            out.push_back(std::move(s));
        }
        std::size_t i = length;
        while (i > 0 && ++word[i - 1] == q) {
            word[--i] = 0;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

void fill_parities(CodeArray& x) {
    const std::size_t n = x.rows();
    const Symbol q = x.q();
    for (std::size_t j = 1; j + 1 < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            s += x.at(i, j);
        }
        x.set(n - 1, j, static_cast<Symbol>((q - s % q) % q));
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 1; j < n; ++j) {
            s += x.at(i, j);
        }
        x.set(i, 0, static_cast<Symbol>((q - s % q) % q));
    }
}

} // namespace

std::vector<Sequence> valid_first_rows(std::size_t n, Symbol q) {
    CodeParams{n, q}.validate();
    return words_in(first_row_params(n, q), n, q);
}

std::vector<Sequence> valid_reversed_last_columns(std::size_t n, Symbol q) {
    CodeParams{n, q}.validate();
    return words_in(last_column_params(n, q), n, q);
}

std::size_t floor_log(const BigInt& value, Symbol base) {
    if (value < 1 || base < 2) {
        throw InvalidArgument("floor_log needs value >= 1 and base >= 2");
    }
    std::size_t k = 0;
    BigInt power = base;
    while (power <= value) {
        ++k;
        power *= base;
    }
    return k;
}

std::vector<CodeArray> brute_force_codewords(const CodeParams& p) {
    p.validate();
    const std::size_t cells = p.n * p.n;
    if (!capped_power(p.q, cells)) {
        throw InvalidArgument("q^(n^2) = " + std::to_string(p.q) + "^" + std::to_string(cells) +
                              " exceeds the enumeration cap of " + std::to_string(kCandidateCap));
    }
    std::vector<CodeArray> out;
    CodeArray x(p.n, p.n, p.q);
    auto digits = x.mutable_data();
    while (true) {
        if (first_violated_condition(x, p) == 0) {
            out.push_back(x);
        }
        std::size_t i = cells;
        while (i > 0 && ++digits[i - 1] == p.q) {
            digits[--i] = 0;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

CodeSize count_code_size(const CodeParams& p, CountMode mode) {
    p.validate();
    CodeSize out;
    if (mode == CountMode::bruteforce) {
        out.size = brute_force_codewords(p).size();
    } else {
        const auto rows = valid_first_rows(p.n, p.q);
        const auto cols = valid_reversed_last_columns(p.n, p.q);
        out.first_rows = rows.size();
        out.last_columns = cols.size();
        BigInt free = 1;
        for (std::size_t i = 0; i < (p.n - 2) * (p.n - 2) - 2; ++i) {
            free *= p.q;
        }
        out.size = BigInt(rows.size()) * cols.size() * free;
    }
    if (!out.empty()) {
        out.code_redundancy =
            static_cast<long long>(p.n * p.n) - static_cast<long long>(floor_log(out.size, p.q));
    }
    return out;
}

std::optional<CodeArray> random_codeword(const CodeParams& p, std::span<const Sequence> first_rows,
                                         std::span<const Sequence> last_columns, std::mt19937_64& rng) {
    p.validate();
    if (first_rows.empty() || last_columns.empty()) {
        return std::nullopt;
    }
    const std::size_t n = p.n;
    std::uniform_int_distribution<std::size_t> pick_row(0, first_rows.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_col(0, last_columns.size() - 1);
    std::uniform_int_distribution<Symbol> symbol(0, p.q - 1);
    const auto& u = first_rows[pick_row(rng)];
    const auto& v = last_columns[pick_col(rng)];
    CodeArray x(n, n, p.q);
    for (std::size_t j = 0; j < n; ++j) {
        x.set(0, j, u[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        x.set(i, n - 1, v[n - 1 - i]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        for (std::size_t j = 1; j + 1 < n; ++j) {
            x.set(i, j, symbol(rng));
        }
    }
    x.set(1, n - 2, 1);
    x.set(2, n - 2, 2);
    fill_parities(x);
    return x;
}

std::vector<CodeArray> codewords_explaining(const ReceivedArray& y, const CodeParams& p) {
    p.validate();
    const std::size_t n = p.n;
    if (y.n != n || y.entries.rows() != n - 1 || y.entries.cols() != n - 1 || y.entries.q() != p.q) {
        throw InvalidArgument("received array does not match the code parameters");
    }
    std::set<CodeArray> found;
    const auto row_fill = y.entries.negated_row_sums();
    for (std::size_t j = 0; j < n; ++j) {
        const auto widened = y.entries.with_column_inserted(j, row_fill);
        const auto col_fill = widened.negated_column_sums();
        for (std::size_t i = 0; i < n; ++i) {
            auto candidate = widened.with_row_inserted(i, col_fill);
            if (is_codeword(candidate, p)) {
                found.insert(std::move(candidate));
            }
        }
    }
    return {found.begin(), found.end()};
}

std::uint64_t count_ball_intersections(std::span<const CodeArray> arrays) {
    std::map<SymbolMatrix, std::vector<std::size_t>> owners;
    for (std::size_t k = 0; k < arrays.size(); ++k) {
        for (const auto& y : deletion_ball(arrays[k])) {
            owners[y].push_back(k);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [ball_element, ks] : owners) {
        for (std::size_t a = 0; a < ks.size(); ++a) {
            for (std::size_t b = a + 1; b < ks.size(); ++b) {
                if (arrays[ks[a]] != arrays[ks[b]]) {
                    pairs.emplace(ks[a], ks[b]);
                }
            }
        }
    }
    return pairs.size();
}

} // namespace crisscross::enumeration
