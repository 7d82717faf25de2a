// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crisscross/analysis.hpp"
#include "crisscross/code.hpp"
#include "crisscross/dvt.hpp"
#include "crisscross/enumeration.hpp"
#include "crisscross/fixtures.hpp"
#include "crisscross/rll_suffix.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace crisscross;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kWorked1dLimitMs = 1.0;
constexpr double kWorked2dLimitMs = 10.0;
constexpr double kSweepLimitS = 60.0;
constexpr double kOracleLimitS = 60.0;
constexpr double kBruteForceLimitS = 300.0;
constexpr double kRatioLow = 3.0;
constexpr double kRatioHigh = 6.0;
constexpr int kSweepVectors = 50;
// |C(4,3)|, frozen from the first brute-force run.
constexpr unsigned kCodeSize43 = 0;

struct Outcome {
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double median_ms(int reps, Fn&& fn) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        t.push_back(seconds_since(start) * 1e3);
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome golden_1d() {
    const rll::Params p{7, 2, 7, 0, {0, 2}};
    const std::vector<Symbol> data{0, 3};
    rll::EncodeTrace trace;
    const auto x = rll::encode(data, p, {true}, &trace);
    const bool exact = x == Sequence({4, 2, 1, 4, 5, 2, 1, 0, 2}, 7) && trace.g1 == 31 &&
                       trace.e == std::array<std::uint64_t, 3>{5, 2, 0} && trace.g4 == 1 &&
                       trace.h == std::vector<Symbol>{1, 0};
    const double ms = median_ms(101, [&] { (void)rll::encode(data, p, {true}); });
    return {exact && ms < kWorked1dLimitMs,
            "x=" + x.to_string() + " g1=" + std::to_string(trace.g1) + " e=(" + std::to_string(trace.e[0]) + "," +
                std::to_string(trace.e[1]) + "," + std::to_string(trace.e[2]) + ") g4=" + std::to_string(trace.g4) +
                ", " + fmt("%.4f ms", ms)};
}

Outcome golden_2d() {
    const auto& p = testdata::kWorkedParams;
    const auto x = encode(testdata::kWorkedData, p, testdata::kRelaxed);
    const bool exact = x == testdata::worked_array() &&
                       recover_data(x, p, testdata::kRelaxed) == testdata::kWorkedData;
    const double ms = median_ms(51, [&] {
        const auto y = encode(testdata::kWorkedData, p, testdata::kRelaxed);
        (void)recover_data(y, p, testdata::kRelaxed);
    });
    return {exact && ms < kWorked2dLimitMs, std::string(exact ? "exact" : "mismatch") + ", " + fmt("%.4f ms", ms)};
}

Outcome golden_decode() {
    const auto& p = testdata::kWorkedParams;
    const auto y = corrupt(testdata::worked_array(), 9, 9);
    DecodeTrace trace;
    const auto x = decode(y, p, &trace);
    const bool ok = y.entries == testdata::worked_received_9_9() && x == testdata::worked_array() &&
                    trace.reversed_last_column == Sequence({6, 5, 6, 0, 1, 0, 1, 2}, 7) && trace.deleted_row == 9 &&
                    trace.restored_row == std::vector<Symbol>{3, 0, 3, 0, 4, 3, 4, 4, 0};
    return {ok, "V'=" + trace.reversed_last_column.to_string() + " i*=" + std::to_string(trace.deleted_row) +
                    " r=" + Sequence(trace.restored_row, 7).to_string()};
}

struct SweepResult {
    std::size_t decodes = 0;
    std::size_t failures = 0;
    std::size_t discriminator_violations = 0;
    double seconds = 0;
};

SweepResult run_sweep() {
    SweepResult s;
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    for (const CodeParams p : {CodeParams{11, 3}, CodeParams{12, 5}, CodeParams{16, 7}}) {
        std::uniform_int_distribution<Symbol> sym(0, p.q - 1);
        const auto total = message_lengths(p).total;
        for (int v = 0; v < kSweepVectors; ++v) {
            std::vector<Symbol> data(total);
            for (auto& f : data) {
                f = sym(rng);
            }
            const auto x = encode(data, p);
            for (std::size_t i = 1; i <= p.n; ++i) {
                for (std::size_t j = 1; j <= p.n; ++j) {
                    const auto y = corrupt(x, i, j);
                    const Symbol top = y.entries.at(0, p.n - 2);
                    const Symbol second = y.entries.at(1, p.n - 2);
                    const bool inner_case =
                        (top == 2 && second == 1) || (top == 2 && second == 0) || (top == 1 && second == 0);
                    const bool last_case =
                        (top == 0 && second == 1) || (top == 0 && second == 2) || (top == 1 && second == 2);
                    if (inner_case != (j < p.n) || last_case != (j == p.n)) {
                        ++s.discriminator_violations;
                    }
                    ++s.decodes;
                    try {
                        const auto back = decode(y, p);
                        if (back != x || recover_data(back, p) != data) {
                            ++s.failures;
                        }
                    } catch (const std::exception&) {
                        ++s.failures;
                    }
                }
            }
        }
    }
    s.seconds = seconds_since(start);
    return s;
}

Outcome one_dimensional_oracle() {
    const auto start = Clock::now();
    const Symbol q = 3;
    std::size_t codewords = 0;
    std::size_t failures = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t a = 0; a < q * n; ++a) {
            const dvt::Params p{n, q, a};
            oracle::for_each_word(n, q, [&](const Sequence& x) {
                if (!dvt::is_dvt_member(x, p)) {
                    return;
                }
                ++codewords;
                const bool rll = adjacent_distinct(x.symbols());
                try {
                    for (std::size_t pos = 1; n >= 2 && pos <= n; ++pos) {
                        const auto r = x.with_deletion(pos);
                        failures += dvt::decode_deletion(r, p).codeword != x;
                        if (rll) {
                            const auto e = dvt::decode_rll_deletion(r, p);
                            failures += e.codeword != x || e.position != pos;
                        }
                    }
                    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
                        for (Symbol s = 0; s < q; ++s) {
                            failures += dvt::decode_insertion(x.with_insertion(pos, s), p) != x;
                        }
                    }
                } catch (const std::exception&) {
                    ++failures;
                }
            });
        }
    }
    const double sec = seconds_since(start);
    return {failures == 0 && sec < kOracleLimitS, std::to_string(codewords) + " codewords, " +
                                                       std::to_string(failures) + " failures, " +
                                                       fmt("%.2f s", sec)};
}

Outcome redundancy() {
    const auto worked = analysis::analyze_point(CodeParams{9, 7}, CodecOptions{true});
    const std::vector<Symbol> qs{3, 4, 5, 7, 11, 101};
    const auto rows = analysis::analyze(11, 64, qs);
    std::size_t bad = 0;
    for (const auto& r : rows) {
        bad += !r.meets_upper_bound() || !r.meets_lower_bound() ||
               r.encoder_redundancy != static_cast<long long>(4 * r.n - 2 - r.k3);
    }
    return {worked.k3 == 2 && worked.encoder_redundancy == 32 && bad == 0,
            "r_ENC(9,7)=" + std::to_string(worked.encoder_redundancy) + ", " + std::to_string(rows.size()) +
                " grid rows, " + std::to_string(bad) + " violations"};
}

std::vector<CodeArray> g_small_codewords;

Outcome structural_count() {
    const CodeParams p{4, 3};
    const auto start = Clock::now();
    g_small_codewords = enumeration::brute_force_codewords(p);
    const double sec = seconds_since(start);
    const auto formula = enumeration::count_code_size(p, enumeration::CountMode::formula);
    const BigInt brute = g_small_codewords.size();
    const bool ok = brute == formula.size && brute == kCodeSize43 && sec < kBruteForceLimitS;
    return {ok, "brute force " + brute.str() + ", |A_U|*|A_V|*3^2 = " + std::to_string(*formula.first_rows) + "*" +
                    std::to_string(*formula.last_columns) + "*9 = " + formula.size.str() + ", " +
                    fmt("%.2f s", sec)};
}

Outcome ball_disjointness() {
    const auto hits = enumeration::count_ball_intersections(g_small_codewords);
    // The (4,3) code is empty, so also sample the smallest nonempty code.
    const CodeParams p{6, 3};
    const auto rows = enumeration::valid_first_rows(6, 3);
    const auto cols = enumeration::valid_reversed_last_columns(6, 3);
    std::mt19937_64 rng(6);
    std::size_t shared = 0;
    constexpr int kSamples = 100;
    for (int s = 0; s < kSamples; ++s) {
        const auto x = enumeration::random_codeword(p, rows, cols, rng);
        for (std::size_t i = 1; i <= 6 && x; ++i) {
            for (std::size_t j = 1; j <= 6; ++j) {
                const auto owners = enumeration::codewords_explaining(corrupt(*x, i, j), p);
                shared += owners.size() != 1;
            }
        }
    }
    return {hits == 0 && shared == 0, std::to_string(g_small_codewords.size()) + " codewords at (4,3), " +
                                          std::to_string(hits) + " intersecting pairs; " +
                                          std::to_string(kSamples) + " sampled codewords at (6,3), " +
                                          std::to_string(shared) + " shared ball elements"};
}

Outcome counterexample_fixtures() {
    const auto r = fixtures::verify_counterexamples();
    std::size_t failed = 0;
    for (const auto& line : r.lines) {
        failed += line.rfind("PASS", 0) != 0;
    }
    return {r.passed, std::to_string(r.lines.size() - failed) + "/" + std::to_string(r.lines.size()) + " assertions"};
}

Outcome complexity() {
    // Rounds alternate between the two sizes so drift on a shared machine hits both.
    constexpr int kWarmup = 3;
    constexpr int kRounds = 41;
    const Symbol q = 257;
    struct Case {
        CodeParams p;
        std::vector<Symbol> data;
        std::vector<double> ms;
    };
    auto make = [q](std::size_t n) {
        Case c{{n, q}, {}, {}};
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<Symbol> sym(0, q - 1);
        c.data.resize(message_lengths(c.p).total);
        for (auto& f : c.data) {
            f = sym(rng);
        }
        return c;
    };
    auto once = [](Case& c) {
        const auto start = Clock::now();
        const auto x = encode(c.data, c.p);
        const auto back = decode(corrupt(x, c.p.n / 2, c.p.n / 3), c.p);
        const double ms = seconds_since(start) * 1e3;
        if (back != x) {
            throw std::runtime_error("round trip failed");
        }
        return ms;
    };
    Case small = make(128);
    Case large = make(256);
    for (int r = 0; r < kWarmup; ++r) {
        once(small);
        once(large);
    }
    for (int r = 0; r < kRounds; ++r) {
        small.ms.push_back(once(small));
        large.ms.push_back(once(large));
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    const double a = median(small.ms);
    const double b = median(large.ms);
    const double ratio = b / a;
    return {ratio >= kRatioLow && ratio <= kRatioHigh,
            fmt("n=128 %.3f ms, ", a) + fmt("n=256 %.3f ms, ", b) + fmt("ratio %.2f", ratio)};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&failures](int id, const char* name, const std::function<Outcome()>& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::printf("%s [%2d] %s: %s\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
    };

    report(1, "golden 1-D encoding example", golden_1d);
    report(2, "golden 2-D encoding example", golden_2d);
    report(3, "golden decode walkthrough", golden_decode);
    SweepResult sweep;
    report(4, "exhaustive deletion sweep", [&] {
        sweep = run_sweep();
        return Outcome{sweep.failures == 0 && sweep.seconds < kSweepLimitS,
                       std::to_string(sweep.decodes) + " decodes, " + std::to_string(sweep.failures) + " failures, " +
                           fmt("%.2f s", sweep.seconds)};
    });
    report(5, "1-D exhaustive oracle", one_dimensional_oracle);
    report(6, "redundancy formula and bounds", redundancy);
    report(7, "structural code-size identity", structural_count);
    report(8, "ball disjointness", ball_disjointness);
    report(9, "counterexample fixtures", counterexample_fixtures);
    report(10, "discriminator soundness", [&] {
        return Outcome{sweep.decodes > 0 && sweep.discriminator_violations == 0,
                       std::to_string(sweep.decodes) + " deletions, " +
                           std::to_string(sweep.discriminator_violations) + " violations"};
    });
    report(11, "quadratic scaling", complexity);

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
