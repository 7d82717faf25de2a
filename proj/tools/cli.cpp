#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crisscross/analysis.hpp"
#include "crisscross/array_file.hpp"
#include "crisscross/code.hpp"
#include "crisscross/enumeration.hpp"
#include "crisscross/errors.hpp"
#include "crisscross/fixtures.hpp"
#include "crisscross/selftest.hpp"

namespace crisscross::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDecode = 3;

struct Globals {
    std::optional<std::size_t> n;
    std::vector<Symbol> q;
    bool allow_unproven = false;
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 1;
};

struct Context {
    Globals g;
    std::ostream& out;
    std::ostream& err;

    CodecOptions codec() const { return {g.allow_unproven}; }

    std::optional<Symbol> single_q() const {
        if (g.q.empty()) {
            return std::nullopt;
        }
        if (g.q.size() != 1) {
            throw InvalidArgument("--q takes a single value for this subcommand");
        }
        return g.q.front();
    }

    // Flags win when given but must agree with what the file says.
    CodeParams params_for(const io::ArrayFile& file) const {
        CodeParams p{file.n, file.q};
        if (g.n && *g.n != file.n) {
            throw InvalidArgument("--n " + std::to_string(*g.n) + " disagrees with n=" + std::to_string(file.n) +
                                  " in the input file");
        }
        if (auto q = single_q(); q && *q != file.q) {
            throw InvalidArgument("--q " + std::to_string(*q) + " disagrees with q=" + std::to_string(file.q) +
                                  " in the input file");
        }
        return p;
    }

    CodeParams params_from_flags() const {
        const auto q = single_q();
        if (!g.n || !q) {
            throw InvalidArgument("--n and --q are required");
        }
        return {*g.n, *q};
    }

    void emit(const io::ArrayFile& file) const {
        if (g.out.empty()) {
            out << io::serialize(file);
        } else {
            io::write_file(g.out, file);
        }
    }

    void emit_text(const std::string& text) const {
        if (g.out.empty()) {
            out << text;
        } else {
            std::ofstream f(g.out, std::ios::binary);
            if (!f) {
                throw InvalidArgument("cannot write " + g.out);
            }
            f << text;
        }
    }
};

io::ArrayFile read_kind(const std::string& path, io::FileKind kind) {
    auto file = io::read_file(path);
    if (file.kind != kind) {
        throw InvalidArgument("expected a \"" + std::string(io::to_string(kind)) + "\" file, got \"" +
                              std::string(io::to_string(file.kind)) + "\"");
    }
    return file;
}

int cmd_encode(const Context& ctx, const std::string& data_path) {
    const auto file = read_kind(data_path, io::FileKind::data);
    const auto p = ctx.params_for(file);
    ctx.emit(io::ArrayFile::from_array(encode(file.symbols(), p, ctx.codec())));
    return kExitOk;
}

int cmd_corrupt(const Context& ctx, const std::string& in, std::size_t row, std::size_t col) {
    const auto file = read_kind(in, io::FileKind::array);
    (void)ctx.params_for(file);
    ctx.emit(io::ArrayFile::from_received(corrupt(file.matrix(), row, col)));
    return kExitOk;
}

int cmd_decode(const Context& ctx, const std::string& in) {
    const auto file = read_kind(in, io::FileKind::received);
    const auto p = ctx.params_for(file);
    ctx.emit(io::ArrayFile::from_array(decode(file.received(), p)));
    return kExitOk;
}

int cmd_recover(const Context& ctx, const std::string& in) {
    const auto file = read_kind(in, io::FileKind::array);
    const auto p = ctx.params_for(file);
    ctx.emit(io::ArrayFile::from_data(p.n, p.q, recover_data(file.matrix(), p, ctx.codec())));
    return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& in) {
    const auto file = read_kind(in, io::FileKind::array);
    const auto p = ctx.params_for(file);
    const auto report = check_codeword(file.matrix(), p);
    if (!report.ok()) {
        throw NotACodeword("not a codeword: " + report.detail);
    }
    ctx.out << "codeword: n=" << p.n << " q=" << p.q << "\n";
    return kExitOk;
}

int cmd_analyze(const Context& ctx, std::optional<std::size_t> n_min, std::optional<std::size_t> n_max) {
    if (ctx.g.n) {
        n_min = n_min.value_or(*ctx.g.n);
        n_max = n_max.value_or(*ctx.g.n);
    }
    if (!n_min || !n_max) {
        throw InvalidArgument("analyze needs --n or --n-min/--n-max");
    }
    if (ctx.g.q.empty()) {
        throw InvalidArgument("analyze needs --q (comma-separated list allowed)");
    }
    const auto rows = analysis::analyze(*n_min, *n_max, ctx.g.q, ctx.codec());
    if (ctx.g.format == "csv") {
        ctx.emit_text(analysis::format_csv(rows));
    } else {
        ctx.emit_text(analysis::format_table(rows));
    }
    return kExitOk;
}

int cmd_count(const Context& ctx, const std::string& mode) {
    const auto p = ctx.params_from_flags();
    p.validate();
    const auto m = mode == "bruteforce" ? enumeration::CountMode::bruteforce : enumeration::CountMode::formula;
    const auto size = enumeration::count_code_size(p, m);
    std::ostringstream os;
    os << "n=" << p.n << " q=" << p.q << " mode=" << mode << "\n";
    if (size.first_rows) {
        os << "first rows: " << *size.first_rows << "\n";
    }
    if (size.last_columns) {
        os << "last columns: " << *size.last_columns << "\n";
    }
    os << "code size: " << size.size << "\n";
    if (size.empty()) {
        os << "empty code\n";
    } else {
        os << "code redundancy: " << *size.code_redundancy << "\n";
    }
    ctx.emit_text(os.str());
    return kExitOk;
}

int cmd_verify_fixtures(const Context& ctx) {
    const auto report = fixtures::verify_counterexamples();
    for (const auto& line : report.lines) {
        ctx.out << line << "\n";
    }
    ctx.out << (report.passed ? "fixtures: pass\n" : "fixtures: FAIL\n");
    return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const Context& ctx, std::size_t trials, bool exhaustive_small) {
    selftest::Options options;
    options.n = ctx.g.n.value_or(options.n);
    options.q = ctx.single_q().value_or(options.q);
    options.trials = trials;
    options.exhaustive_small = exhaustive_small;
    options.seed = ctx.g.seed;
    options.allow_unproven_parameters = ctx.g.allow_unproven;
    const auto report = selftest::run(options);
    for (const auto& line : report.log) {
        ctx.out << line << "\n";
    }
    if (report.reproducer) {
        ctx.out << "reproducer: " << *report.reproducer << "\n";
    }
    ctx.out << (report.passed ? "selftest: pass" : "selftest: FAIL") << " (" << report.seconds << " s)\n";
    return report.passed ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-ary single criss-cross deletion correcting code"};
    app.name("crisscross");
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{{}, out, err};
    app.add_option("--n", ctx.g.n, "array dimension");
    app.add_option("--q", ctx.g.q, "alphabet size (analyze accepts a comma-separated list)")->delimiter(',');
    app.add_flag("--allow-unproven-parameters", ctx.g.allow_unproven,
                 "accept n below the proven range (down to n = 8)");
    app.add_option("--format", ctx.g.format, "analyze/count output format")
        ->check(CLI::IsMember({"table", "csv"}));
    app.add_option("--out", ctx.g.out, "output file (default: stdout)");
    app.add_option("--seed", ctx.g.seed, "selftest random seed");

    std::string data_path;
    auto* encode_cmd = app.add_subcommand("encode", "encode a data file into an n x n array");
    encode_cmd->add_option("--data,data", data_path, "data file")->required();

    std::string in_path;
    std::size_t row = 0;
    std::size_t col = 0;
    auto* corrupt_cmd = app.add_subcommand("corrupt", "delete one row and one column");
    corrupt_cmd->add_option("--in,in", in_path, "array file")->required();
    corrupt_cmd->add_option("--row", row, "1-based row index")->required();
    corrupt_cmd->add_option("--col", col, "1-based column index")->required();

    auto* decode_cmd = app.add_subcommand("decode", "restore a received array");
    decode_cmd->add_option("--in,in", in_path, "received file")->required();

    auto* recover_cmd = app.add_subcommand("recover", "extract the data from a codeword");
    recover_cmd->add_option("--in,in", in_path, "array file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check code membership of an array file");
    verify_cmd->add_option("--in,in", in_path, "array file")->required();

    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    auto* analyze_cmd = app.add_subcommand("analyze", "redundancy against the bounds");
    analyze_cmd->add_option("--n-min", n_min, "smallest n");
    analyze_cmd->add_option("--n-max", n_max, "largest n");

    std::string mode = "formula";
    auto* count_cmd = app.add_subcommand("count", "exact code size");
    count_cmd->add_option("--mode", mode, "formula or bruteforce")->check(CLI::IsMember({"formula", "bruteforce"}));

    auto* fixtures_cmd = app.add_subcommand("verify-fixtures", "check the embedded counterexample arrays");

    std::size_t trials = 50;
    bool exhaustive_small = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "randomized and exhaustive property checks");
    selftest_cmd->add_option("--trials", trials, "random trials");
    selftest_cmd->add_flag("--exhaustive-small", exhaustive_small, "also run the small exhaustive suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*encode_cmd) {
            return cmd_encode(ctx, data_path);
        }
        if (*corrupt_cmd) {
            return cmd_corrupt(ctx, in_path, row, col);
        }
        if (*decode_cmd) {
            return cmd_decode(ctx, in_path);
        }
        if (*recover_cmd) {
            return cmd_recover(ctx, in_path);
        }
        if (*verify_cmd) {
            return cmd_verify(ctx, in_path);
        }
        if (*analyze_cmd) {
            return cmd_analyze(ctx, n_min, n_max);
        }
        if (*count_cmd) {
            return cmd_count(ctx, mode);
        }
        if (*fixtures_cmd) {
            return cmd_verify_fixtures(ctx);
        }
        if (*selftest_cmd) {
            return cmd_selftest(ctx, trials, exhaustive_small);
        }
    } catch (const DecodeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDecode;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace crisscross::cli
