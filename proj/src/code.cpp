#include "crisscross/code.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "crisscross/dvt.hpp"
#include "crisscross/errors.hpp"

namespace crisscross {

namespace {

void check_shape(const SymbolMatrix& x, const CodeParams& p) {
    p.validate();
    if (x.rows() != p.n || x.cols() != p.n) {
        throw InvalidArgument("array is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                              " but the code has n=" + std::to_string(p.n));
    }
    if (x.q() != p.q) {
        throw InvalidArgument("array alphabet q=" + std::to_string(x.q()) +
                              " does not match code alphabet q=" + std::to_string(p.q));
    }
}

// Condition 1/2 check on a word given through an accessor (1-based index).
template <typename At>
bool valid_border_word(std::size_t n, Symbol q, At at) {
    for (std::size_t i = 1; i < n; ++i) {
        if (at(i) == at(i + 1)) {
            return false;
        }
    }
    const std::uint64_t modulus = static_cast<std::uint64_t>(q) * n;
    std::uint64_t syn = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const Symbol d = at(i) >= at(i + 1) ? at(i) - at(i + 1) : at(i) + q - at(i + 1);
        syn = (syn + static_cast<std::uint64_t>(i) * d) % modulus;
    }
    syn = (syn + static_cast<std::uint64_t>(n) * at(n)) % modulus;
    return syn == 0;
}

// Calls fn(row, col, index) for each directly stored data symbol, with 1-based
// row/col and 1-based data index, in data order.
template <typename Fn>
void for_each_payload_position(std::size_t n, std::size_t k3, Fn fn) {
    for (std::size_t j = 2; j <= n - 2; ++j) {
        fn(2, j, k3 + j - 1);
    }
    for (std::size_t j = 2; j <= n - 2; ++j) {
        fn(3, j, k3 + j + n - 4);
    }
    for (std::size_t i = 4; i <= n - 1; ++i) {
        for (std::size_t j = 2; j <= n - 1; ++j) {
            fn(i, j, k3 + (n - 2) * i + j - 2 * n + 1);
        }
    }
}

BigInt power(Symbol base, std::size_t exponent) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

} // namespace

void CodeParams::validate() const {
    require_alphabet(q, 3);
    if (n < 4) {
        throw InvalidArgument("array dimension n=" + std::to_string(n) + " must be at least 4");
    }
}

rll::Params first_row_params(std::size_t n, Symbol q) {
    return {n - 2, 2, q, 0, {0, 2}};
}

rll::Params last_column_params(std::size_t n, Symbol q) {
    return {n - 3, 3, q, 0, {0, 1, 2}};
}

int first_violated_condition(const CodeArray& x, const CodeParams& p) {
    check_shape(x, p);
    const std::size_t n = p.n;
    const Symbol q = p.q;
    auto entry = [&](std::size_t i, std::size_t j) { return x.at(i - 1, j - 1); };

    if (entry(1, n - 1) != 0 || entry(1, n) != 2 ||
        !valid_border_word(n, q, [&](std::size_t i) { return entry(1, i); })) {
        return 1;
    }
    // v_i = X[n-i+1][n]; v_{n-2} = 0, v_{n-1} = 1, v_n = 2.
    if (entry(3, n) != 0 || entry(2, n) != 1 || entry(1, n) != 2 ||
        !valid_border_word(n, q, [&](std::size_t i) { return entry(n - i + 1, n); })) {
        return 2;
    }
    if (entry(2, n - 1) != 1 || entry(3, n - 1) != 2) {
        return 3;
    }
    for (std::size_t i = 2; i <= n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            s += entry(i, j);
        }
        if (s % q != 0) {
            return 4;
        }
    }
    for (std::size_t j = 2; j <= n - 1; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            s += entry(i, j);
        }
        if (s % q != 0) {
            return 5;
        }
    }
    return 0;
}

MembershipReport check_codeword(const CodeArray& x, const CodeParams& p) {
    static constexpr const char* kDescriptions[] = {
        "",
        "first row is not a 1-RLL Differential VT word with syndrome 0 ending in (0,2)",
        "reversed last column is not a 1-RLL Differential VT word with syndrome 0 ending in (0,1,2)",
        "fixed entries X[2][n-1]=1, X[3][n-1]=2 do not hold",
        "a row among 2..n does not sum to 0 mod q",
        "a column among 2..n-1 does not sum to 0 mod q",
    };
    const int violated = first_violated_condition(x, p);
    return {violated, violated ? "condition " + std::to_string(violated) + ": " + kDescriptions[violated] : ""};
}

bool is_codeword(const CodeArray& x, const CodeParams& p) {
    return first_violated_condition(x, p) == 0;
}

bool check_zero_sums(const CodeArray& x, const CodeParams& p) {
    if (x.rows() != p.n || x.cols() != p.n) {
        throw InvalidArgument("array shape does not match n=" + std::to_string(p.n));
    }
    for (auto s : x.negated_row_sums()) {
        if (s != 0) {
            return false;
        }
    }
    for (auto s : x.negated_column_sums()) {
        if (s != 0) {
            return false;
        }
    }
    return true;
}

ReceivedArray corrupt(const CodeArray& x, std::size_t row, std::size_t col) {
    if (x.rows() != x.cols()) {
        throw InvalidArgument("criss-cross deletion needs a square array");
    }
    const std::size_t n = x.rows();
    if (row < 1 || row > n || col < 1 || col > n) {
        throw InvalidArgument("deletion position (" + std::to_string(row) + "," + std::to_string(col) +
                              ") outside [1," + std::to_string(n) + "]");
    }
    return {x.with_row_and_column_removed(row - 1, col - 1), n};
}

std::set<SymbolMatrix> deletion_ball(const SymbolMatrix& x) {
    std::set<SymbolMatrix> ball;
    for (std::size_t i = 1; i <= x.rows(); ++i) {
        for (std::size_t j = 1; j <= x.cols(); ++j) {
            ball.insert(corrupt(x, i, j).entries);
        }
    }
    return ball;
}

MessageLengths message_lengths(const CodeParams& p, const CodecOptions& options) {
    p.validate();
    const std::size_t minimum = options.allow_unproven_parameters ? 8 : 11;
    if (p.n < minimum) {
        throw InvalidArgument(std::string(options.allow_unproven_parameters ? "n below supported range"
                                                                            : "n below proven range") +
                              ": n=" + std::to_string(p.n) + ", encoding needs n >= " + std::to_string(minimum));
    }
    const std::size_t n = p.n;
    const Symbol q = p.q;
    const std::size_t t1 = floor_log(n - 2, q - 1);
    const std::size_t t2 = floor_log(n - 3, q - 1);
    if (n < 7 + t1 || n < 8 + t2) {
        throw InvalidArgument("n=" + std::to_string(n) + ", q=" + std::to_string(q) +
                              " leaves no data positions in the first row or last column");
    }
    MessageLengths out;
    out.k1 = n - 6 - t1;
    out.k2 = n - 7 - t2;
    // k3 = largest k with q^k <= (q-1)^(k1+k2)
    const BigInt limit = power(q - 1, out.k1 + out.k2);
    BigInt qk = q;
    while (qk <= limit) {
        ++out.k3;
        qk *= q;
    }
    out.total = n * n - 4 * n + 2 + out.k3;
    return out;
}

CodeArray encode(std::span<const Symbol> data, const CodeParams& p, const CodecOptions& options,
                 EncodeTrace* trace) {
    const auto lengths = message_lengths(p, options);
    const std::size_t n = p.n;
    const Symbol q = p.q;
    if (data.size() != lengths.total) {
        throw InvalidArgument("expected " + std::to_string(lengths.total) + " data symbols for n=" +
                              std::to_string(n) + ", q=" + std::to_string(q) + ", got " +
                              std::to_string(data.size()));
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i] >= q) {
            throw InvalidArgument("data symbol " + std::to_string(i + 1) + "=" + std::to_string(data[i]) +
                                  " outside Z_" + std::to_string(q));
        }
    }

    // h = sum_{i=1}^{k3} f_i q^(i-1), re-expanded in base q-1.
    BigInt h = 0;
    for (std::size_t i = lengths.k3; i-- > 0;) {
        h = h * q + data[i];
    }
    std::vector<Symbol> digits(lengths.k1 + lengths.k2);
    BigInt rest = h;
    for (auto& d : digits) {
        d = static_cast<Symbol>(rest % (q - 1));
        rest /= q - 1;
    }
    if (rest != 0) {
        throw InternalError("h does not fit in k1+k2 base-(q-1) digits");
    }

    const rll::EncodeOptions rll_options{options.allow_unproven_parameters};
    const std::span<const Symbol> all_digits(digits);
    auto u = rll::encode(all_digits.first(lengths.k1), first_row_params(n, q), rll_options);
    auto v = rll::encode(all_digits.subspan(lengths.k1), last_column_params(n, q), rll_options);

    CodeArray x(n, n, q);
    auto put = [&](std::size_t i, std::size_t j, Symbol value) { x.set(i - 1, j - 1, value); };
    for (std::size_t j = 1; j <= n; ++j) {
        put(1, j, u[j - 1]);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        put(i, n, v[n - i]);
    }
    put(2, n - 1, 1);
    put(3, n - 1, 2);
    for_each_payload_position(n, lengths.k3, [&](std::size_t i, std::size_t j, std::size_t index) {
        put(i, j, data[index - 1]);
    });

    // Last-row parities first: the row-n parity X[n][1] depends on them.
    auto entry = [&](std::size_t i, std::size_t j) { return x.at(i - 1, j - 1); };
    for (std::size_t j = 2; j <= n - 1; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 1; i <= n - 1; ++i) {
            s += entry(i, j);
        }
        put(n, j, static_cast<Symbol>((q - s % q) % q));
    }
    for (std::size_t i = 2; i <= n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 2; j <= n; ++j) {
            s += entry(i, j);
        }
        put(i, 1, static_cast<Symbol>((q - s % q) % q));
    }

    const auto report = check_codeword(x, p);
    if (!report.ok()) {
        if (options.allow_unproven_parameters) {
            throw InvalidArgument("encoder output is not a codeword for n=" + std::to_string(n) +
                                  " (parameters outside the proven range): " + report.detail);
        }
        throw InternalError("encoder output is not a codeword: " + report.detail);
    }
    if (trace) {
        trace->lengths = lengths;
        trace->h = h;
        trace->digits = std::move(digits);
        trace->first_row = std::move(u);
        trace->reversed_last_column = std::move(v);
    }
    return x;
}

CodeArray decode(const ReceivedArray& y, const CodeParams& p, DecodeTrace* trace) {
    p.validate();
    const std::size_t n = p.n;
    if (y.n != n) {
        throw InvalidArgument("received array declares n=" + std::to_string(y.n) +
                              " but the code has n=" + std::to_string(n));
    }
    if (y.entries.rows() != n - 1 || y.entries.cols() != n - 1) {
        throw InvalidArgument("received array must be " + std::to_string(n - 1) + "x" +
                              std::to_string(n - 1));
    }
    if (y.entries.q() != p.q) {
        throw InvalidArgument("received array alphabet does not match q=" + std::to_string(p.q));
    }

    DecodeTrace local;
    DecodeTrace& t = trace ? *trace : local;
    const SymbolMatrix& in = y.entries;
    const Symbol q = p.q;
    auto neg = [q](std::uint64_t sum) { return static_cast<Symbol>((q - sum % q) % q); };

    t.corner_top = in.at(0, n - 2);
    t.corner_second = in.at(1, n - 2);
    t.last_column_deleted = t.corner_top < t.corner_second;

    // Work on views of the received array; the result is assembled once at the end.
    std::vector<std::uint64_t> row_sums(n - 1, 0);
    std::vector<std::uint64_t> col_sums(n, 0);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        const auto row = in.row(r);
        for (std::size_t c = 0; c + 1 < n; ++c) {
            row_sums[r] += row[c];
            col_sums[c] += row[c];
        }
    }
    const std::size_t width = t.last_column_deleted ? n : n - 1;
    if (t.last_column_deleted) {
        t.restored_last_column.resize(n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            t.restored_last_column[r] = neg(row_sums[r]);
            col_sums[n - 1] += t.restored_last_column[r];
            row_sums[r] += t.restored_last_column[r];
        }
    }
    auto stage_at = [&](std::size_t r, std::size_t c) {
        return c + 1 < n ? in.at(r, c) : t.restored_last_column[r];
    };

    std::size_t column_position = 0;
    try {
        std::vector<Symbol> last(n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            last[n - 2 - r] = stage_at(r, width - 1);
        }
        t.reversed_last_column = Sequence(std::move(last), q);
        const auto column = rll::decode(t.reversed_last_column, last_column_params(n, q));
        t.deleted_row = n - column.position + 1;

        t.restored_row.resize(width);
        for (std::size_t c = 0; c < width; ++c) {
            t.restored_row[c] = neg(col_sums[c]);
        }

        if (!t.last_column_deleted) {
            std::vector<Symbol> first(width);
            for (std::size_t c = 0; c < width; ++c) {
                first[c] = t.deleted_row == 1 ? t.restored_row[c] : in.at(0, c);
            }
            const auto row = rll::decode(Sequence(std::move(first), q), first_row_params(n, q));
            column_position = row.position;
            t.deleted_column = row.position;
            std::uint64_t restored_row_sum = 0;
            for (auto v : t.restored_row) {
                restored_row_sum += v;
            }
            t.restored_column.resize(n);
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t i = t.deleted_row - 1;
                t.restored_column[r] = neg(r == i ? restored_row_sum : row_sums[r < i ? r : r - 1]);
            }
        }
    } catch (const DecodeError& e) {
        throw NotDecodable(std::string("NotDecodable: ") + e.what());
    }

    SymbolMatrix cur(n, n, q);
    auto out = cur.mutable_data();
    const std::size_t i = t.deleted_row - 1;
    const std::size_t j = column_position == 0 ? n : column_position - 1;
    for (std::size_t r = 0; r < n; ++r) {
        Symbol* dst = out.data() + r * n;
        if (r == i) {
            for (std::size_t c = 0, k = 0; c < n; ++c) {
                dst[c] = c == j ? t.restored_column[r] : t.restored_row[k++];
            }
            continue;
        }
        const std::size_t src = r < i ? r : r - 1;
        const auto row = in.row(src);
        if (t.last_column_deleted) {
            std::copy(row.begin(), row.end(), dst);
            dst[n - 1] = t.restored_last_column[src];
        } else {
            std::copy(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(j), dst);
            dst[j] = t.restored_column[r];
            std::copy(row.begin() + static_cast<std::ptrdiff_t>(j), row.end(), dst + j + 1);
        }
    }

    const auto report = check_codeword(cur, p);
    if (!report.ok()) {
        throw NotDecodable("NotDecodable: reconstructed array fails " + report.detail);
    }
    return cur;
}

std::vector<Symbol> recover_data(const CodeArray& x, const CodeParams& p, const CodecOptions& options,
                                 BigInt* h_out) {
    const auto lengths = message_lengths(p, options);
    const auto report = check_codeword(x, p);
    if (!report.ok()) {
        throw NotACodeword("not a codeword: " + report.detail);
    }
    const std::size_t n = p.n;
    const Symbol q = p.q;
    const bool relaxed = options.allow_unproven_parameters;

    const Sequence u(std::vector<Symbol>(x.row(0).begin(), x.row(0).end()), q);
    const auto v = Sequence(x.column(n - 1), q).reversed();
    auto digits = rll::recover_data(u, first_row_params(n, q), relaxed);
    const auto tail = rll::recover_data(v, last_column_params(n, q), relaxed);
    digits.insert(digits.end(), tail.begin(), tail.end());
    if (digits.size() != lengths.k1 + lengths.k2) {
        throw InternalError("recovered digit count differs from k1+k2");
    }

    BigInt h = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        h = h * (q - 1) + digits[i];
    }
    if (h >= power(q, lengths.k3)) {
        throw OutsideEncoderImage("codeword carries h >= q^k3; no data vector encodes to it");
    }
    if (h_out) {
        *h_out = h;
    }

    std::vector<Symbol> data(lengths.total);
    BigInt rest = h;
    for (std::size_t i = 0; i < lengths.k3; ++i) {
        data[i] = static_cast<Symbol>(rest % q);
        rest /= q;
    }
    for_each_payload_position(n, lengths.k3, [&](std::size_t i, std::size_t j, std::size_t index) {
        data[index - 1] = x.at(i - 1, j - 1);
    });
    return data;
}

} // namespace crisscross
