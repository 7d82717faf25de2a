#include "crisscross/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "crisscross/dvt.hpp"
#include "crisscross/enumeration.hpp"
#include "crisscross/errors.hpp"

namespace crisscross::selftest {

namespace {

std::string join(const std::vector<Symbol>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ']';
    return os.str();
}

class Run {
public:
    explicit Run(const Options& options) : options_(options), rng_(options.seed) {}

    Report finish(double seconds) {
        report_.seconds = seconds;
        return std::move(report_);
    }

    bool failed() const { return !report_.passed; }

    void fail(std::string what, std::string reproducer) {
        report_.passed = false;
        report_.log.push_back("FAIL " + what);
        if (!report_.reproducer) {
            report_.reproducer = std::move(reproducer);
        }
    }

    void note(std::string line) { report_.log.push_back(std::move(line)); }

    void random_trials() {
        const CodeParams p{options_.n, options_.q};
        const CodecOptions codec{options_.allow_unproven_parameters};
        const auto lengths = message_lengths(p, codec);
        std::uniform_int_distribution<Symbol> symbol(0, p.q - 1);
        const std::size_t n = p.n;
        for (std::size_t trial = 0; trial < options_.trials && !failed(); ++trial) {
            std::vector<Symbol> data(lengths.total);
            for (auto& f : data) {
                f = symbol(rng_);
            }
            const std::string where = "n=" + std::to_string(n) + " q=" + std::to_string(p.q) +
                                      " seed=" + std::to_string(options_.seed) +
                                      " trial=" + std::to_string(trial);
            auto repro = [&](const std::string& extra) { return where + extra + " data=" + join(data); };
            try {
                const auto x = encode(data, p, codec);
                if (!check_zero_sums(x, p)) {
                    fail("zero-sum property violated by an encoder output", repro(""));
                    return;
                }
                if (recover_data(x, p, codec) != data) {
                    fail("data recovery from the undamaged codeword", repro(""));
                    return;
                }
                for (std::size_t i = 1; i <= n && !failed(); ++i) {
                    for (std::size_t j = 1; j <= n && !failed(); ++j) {
                        trial_position(p, codec, x, data, i, j, repro);
                    }
                }
            } catch (const std::exception& e) {
                fail(std::string("exception: ") + e.what(), repro(""));
            }
        }
        if (!failed()) {
            note("PASS " + std::to_string(options_.trials) + " random trials x " + std::to_string(n * n) +
                 " deletion positions at n=" + std::to_string(n) + ", q=" + std::to_string(p.q));
        }
    }

    void exhaustive_small() {
        dvt_exhaustive();
        if (!failed()) {
            small_code_disjointness();
        }
        if (!failed()) {
            sampled_disjointness();
        }
    }

private:
    template <typename Repro>
    void trial_position(const CodeParams& p, const CodecOptions& codec, const CodeArray& x,
                        const std::vector<Symbol>& data, std::size_t i, std::size_t j, Repro& repro) {
        const std::size_t n = p.n;
        const std::string at = " deletion=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        const auto y = corrupt(x, i, j);
        const Symbol top = y.entries.at(0, n - 2);
        const Symbol second = y.entries.at(1, n - 2);
        const bool last = j == n;
        const bool expected_pair = last ? ((top == 0 && second == 1) || (top == 0 && second == 2) ||
                                           (top == 1 && second == 2))
                                        : ((top == 2 && second == 1) || (top == 2 && second == 0) ||
                                           (top == 1 && second == 0));
        if (!expected_pair) {
            fail("discriminator pair (" + std::to_string(top) + "," + std::to_string(second) +
                     ") outside the expected cases",
                 repro(at));
            return;
        }
        auto decoded = decode(y, p);
        if (options_.post_decode_hook) {
            options_.post_decode_hook(decoded);
        }
        if (decoded != x) {
            fail("decoded array differs from the transmitted codeword", repro(at));
            return;
        }
        if (recover_data(decoded, p, codec) != data) {
            fail("recovered data differs", repro(at));
        }
    }

    void dvt_exhaustive() {
        const Symbol q = 3;
        for (std::size_t n = 2; n <= 5 && !failed(); ++n) {
            std::size_t words = 1;
            for (std::size_t k = 0; k < n; ++k) {
                words *= q;
            }
            for (std::uint64_t a = 0; a < q * n; ++a) {
                const dvt::Params p{n, q, a};
                for (std::size_t code = 0; code < words; ++code) {
                    std::vector<Symbol> w(n);
                    for (std::size_t k = 0, c = code; k < n; ++k, c /= q) {
                        w[k] = static_cast<Symbol>(c % q);
                    }
                    const Sequence x(w, q);
                    if (!dvt::is_dvt_member(x, p)) {
                        continue;
                    }
                    const std::string where = "dvt n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                              " x=" + x.to_string();
                    try {
                        for (std::size_t pos = 1; pos <= n; ++pos) {
                            if (dvt::decode_deletion(x.with_deletion(pos), p).codeword != x) {
                                fail("1-D deletion decoding", where + " pos=" + std::to_string(pos));
                                return;
                            }
                        }
                        for (std::size_t pos = 1; pos <= n + 1; ++pos) {
                            for (Symbol s = 0; s < q; ++s) {
                                if (dvt::decode_insertion(x.with_insertion(pos, s), p) != x) {
                                    fail("1-D insertion decoding", where + " pos=" + std::to_string(pos));
                                    return;
                                }
                            }
                        }
                    } catch (const std::exception& e) {
                        fail(std::string("1-D decoding threw: ") + e.what(), where);
                        return;
                    }
                }
            }
        }
        if (!failed()) {
            note("PASS 1-D deletion/insertion decoding, every codeword for n <= 5, q = 3, all a");
        }
    }

    void small_code_disjointness() {
        const CodeParams p{4, 3};
        const auto words = enumeration::brute_force_codewords(p);
        for (const auto& x : words) {
            if (!check_zero_sums(x, p)) {
                fail("zero-sum property violated by an enumerated codeword", "n=4 q=3\n" + x.to_string());
                return;
            }
        }
        const auto formula = enumeration::count_code_size(p, enumeration::CountMode::formula);
        if (formula.size != words.size()) {
            fail("structural code size differs from brute force at n=4, q=3", "n=4 q=3");
            return;
        }
        if (enumeration::count_ball_intersections(words) != 0) {
            fail("intersecting deletion balls at n=4, q=3", "n=4 q=3");
            return;
        }
        note("PASS brute force at n=4, q=3: " + std::to_string(words.size()) +
             " codewords, matches structural count, balls disjoint");
    }

    void sampled_disjointness() {
        const CodeParams p{6, 3};
        const auto rows = enumeration::valid_first_rows(p.n, p.q);
        const auto cols = enumeration::valid_reversed_last_columns(p.n, p.q);
        constexpr std::size_t kSamples = 200;
        for (std::size_t s = 0; s < kSamples; ++s) {
            const auto x = enumeration::random_codeword(p, rows, cols, rng_);
            if (!x) {
                note("SKIP sampled ball check: empty code at n=6, q=3");
                return;
            }
            if (!is_codeword(*x, p) || !check_zero_sums(*x, p)) {
                fail("assembled array is not a zero-sum codeword", "n=6 q=3\n" + x->to_string());
                return;
            }
            for (std::size_t i = 1; i <= p.n; ++i) {
                for (std::size_t j = 1; j <= p.n; ++j) {
                    const auto explaining = enumeration::codewords_explaining(corrupt(*x, i, j), p);
                    if (explaining.size() != 1 || explaining.front() != *x) {
                        fail("deletion ball shared with another codeword",
                             "n=6 q=3 deletion=(" + std::to_string(i) + "," + std::to_string(j) + ")\n" +
                                 x->to_string());
                        return;
                    }
                }
            }
        }
        note("PASS " + std::to_string(kSamples) + " sampled codewords at n=6, q=3 own their deletion balls");
    }

    const Options& options_;
    std::mt19937_64 rng_;
    Report report_;
};

} // namespace

Report run(const Options& options) {
    const auto start = std::chrono::steady_clock::now();
    Run run(options);
    try {
        run.random_trials();
        if (!run.failed() && options.exhaustive_small) {
            run.exhaustive_small();
        }
    } catch (const InvalidArgument& e) {
        run.fail(std::string("invalid parameters: ") + e.what(),
                 "n=" + std::to_string(options.n) + " q=" + std::to_string(options.q));
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return run.finish(elapsed.count());
}

} // namespace crisscross::selftest
