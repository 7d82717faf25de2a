#include "crisscross/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "crisscross/errors.hpp"

namespace crisscross::analysis {

namespace {

double log_base(double x, double base) {
    return std::log(x) / std::log(base);
}

constexpr const char* kColumns[] = {"n", "q", "k1", "k2", "k3", "message_length", "encoder_redundancy",
                                    "lower_bound", "upper_bound", "gap"};

std::vector<std::string> cells(const AnalysisRow& r) {
    auto real = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    return {std::to_string(r.n),  std::to_string(r.q),  std::to_string(r.k1),
            std::to_string(r.k2), std::to_string(r.k3), std::to_string(r.message_length),
            std::to_string(r.encoder_redundancy), real(r.lower_bound), real(r.upper_bound),
            real(r.gap)};
}

} // namespace

bool AnalysisRow::meets_upper_bound() const noexcept {
    return static_cast<double>(encoder_redundancy) <= upper_bound + kBoundSlack;
}

bool AnalysisRow::meets_lower_bound() const noexcept {
    return static_cast<double>(encoder_redundancy) >= lower_bound - kBoundSlack;
}

double lower_bound(std::size_t n, Symbol q) {
    const double nd = static_cast<double>(n);
    return 2 * nd + 2 * log_base(nd, q) - 3;
}

double upper_bound(std::size_t n, Symbol q) {
    const double nd = static_cast<double>(n);
    const double qd = q;
    return 2 * nd + 2 * log_base(nd, qd) + (2 * nd - 13) * log_base(qd / (qd - 1), qd) + 12;
}

AnalysisRow analyze_point(const CodeParams& p, const CodecOptions& options) {
    const auto lengths = message_lengths(p, options);
    AnalysisRow row;
    row.n = p.n;
    row.q = p.q;
    row.k1 = lengths.k1;
    row.k2 = lengths.k2;
    row.k3 = lengths.k3;
    row.message_length = lengths.total;
    row.encoder_redundancy = 4 * static_cast<long long>(p.n) - 2 - static_cast<long long>(lengths.k3);
    row.lower_bound = lower_bound(p.n, p.q);
    row.upper_bound = upper_bound(p.n, p.q);
    row.gap = static_cast<double>(row.encoder_redundancy) - row.lower_bound;
    return row;
}

std::vector<AnalysisRow> analyze(std::size_t n_min, std::size_t n_max, std::span<const Symbol> qs,
                                 const CodecOptions& options) {
    if (n_min > n_max) {
        throw InvalidArgument("empty n range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    if (n_max > kMaxAnalysisN) {
        throw InvalidArgument("n-max above " + std::to_string(kMaxAnalysisN));
    }
    if (qs.empty()) {
        throw InvalidArgument("no alphabet sizes given");
    }
    std::vector<AnalysisRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        for (auto q : qs) {
            rows.push_back(analyze_point({n, q}, options));
        }
    }
    return rows;
}

std::string format_csv(std::span<const AnalysisRow> rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        os << (i ? "," : "") << kColumns[i];
    }
    os << '\n';
    for (const auto& r : rows) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) {
            os << (i ? "," : "") << c[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string format_table(std::span<const AnalysisRow> rows) {
    std::vector<std::vector<std::string>> grid;
    grid.emplace_back(std::begin(kColumns), std::end(kColumns));
    for (const auto& r : rows) {
        grid.push_back(cells(r));
    }
    std::vector<std::size_t> width(std::size(kColumns), 0);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    std::ostringstream os;
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << (i ? "  " : "") << std::string(width[i] - line[i].size(), ' ') << line[i];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace crisscross::analysis
