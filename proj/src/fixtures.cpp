#include "crisscross/fixtures.hpp"

#include <sstream>

#include "crisscross/code.hpp"

namespace crisscross::fixtures {

namespace {

constexpr const char* kRowCollisionShared[] = {
    "0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 0",
    "0 1 0 1 0 1 0 1 0 1 0 1 1 0 0 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 0",
    "0 1 0 1 0 1 0 1 0 1 0 1 1 0 0 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1",
    "1 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1",
    "1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 1 1 0 0 0 0 0 0 0 0 0 1 1 0 0",
};
constexpr const char* kMarked = "0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0";
constexpr const char* kBlank = "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0";

std::vector<Symbol> parse_row(const char* text) {
    std::istringstream in(text);
    std::vector<Symbol> row;
    Symbol v;
    while (in >> v) {
        row.push_back(v);
    }
    return row;
}

SymbolMatrix row_collision(const char* row15, const char* row16) {
    std::vector<std::vector<Symbol>> rows;
    for (const char* r : kRowCollisionShared) {
        rows.push_back(parse_row(r));
    }
    rows.push_back(parse_row(row15));
    rows.push_back(parse_row(row16));
    return SymbolMatrix(std::move(rows), 2);
}

std::vector<std::uint64_t> row_sums(const SymbolMatrix& m) {
    std::vector<std::uint64_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (auto v : m.row(r)) {
            out[r] += v;
        }
    }
    return out;
}

std::vector<std::uint64_t> column_sums(const SymbolMatrix& m) {
    std::vector<std::uint64_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[c] += m.at(r, c);
        }
    }
    return out;
}

void expect(FixtureReport& report, bool ok, const std::string& what) {
    report.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    report.passed = report.passed && ok;
}

} // namespace

SymbolMatrix sum_collision_first() {
    return SymbolMatrix({{1, 1}, {1, 2}}, 4);
}

SymbolMatrix sum_collision_second() {
    return SymbolMatrix({{2, 0}, {0, 3}}, 4);
}

SymbolMatrix row_collision_first() {
    return row_collision(kMarked, kBlank);
}

SymbolMatrix row_collision_second() {
    return row_collision(kBlank, kMarked);
}

FixtureReport check_sum_collision(const SymbolMatrix& a, const SymbolMatrix& b) {
    FixtureReport report;
    expect(report, a != b, "2x2 arrays are distinct");
    expect(report, row_sums(a) == row_sums(b), "2x2 arrays have equal row sums");
    expect(report, column_sums(a) == column_sums(b), "2x2 arrays have equal column sums");
    if (a.rows() == 2 && a.cols() == 2 && b.rows() == 2 && b.cols() == 2) {
        const auto ya = corrupt(a, 1, 1).entries;
        const auto yb = corrupt(b, 2, 2).entries;
        expect(report, ya == yb, "deleting (1,1) of the first and (2,2) of the second give the same array");
        expect(report, ya == SymbolMatrix({{2}}, a.q()), "the shared result is [[2]]");
    } else {
        expect(report, false, "2x2 arrays have shape 2x2");
    }
    return report;
}

FixtureReport check_row_collision(const SymbolMatrix& a, const SymbolMatrix& b) {
    FixtureReport report;
    expect(report, a.rows() == 16 && a.cols() == 16 && b.rows() == 16 && b.cols() == 16,
           "16x16 arrays have shape 16x16");
    if (!report.passed) {
        return report;
    }
    expect(report, a != b, "16x16 arrays are distinct");
    expect(report, corrupt(a, 15, 1).entries == corrupt(b, 16, 1).entries,
           "deleting (15,1) of the first and (16,1) of the second give the same 15x15 array");
    return report;
}

FixtureReport verify_counterexamples() {
    auto report = check_sum_collision(sum_collision_first(), sum_collision_second());
    const auto second = check_row_collision(row_collision_first(), row_collision_second());
    report.lines.insert(report.lines.end(), second.lines.begin(), second.lines.end());
    report.passed = report.passed && second.passed;
    return report;
}

} // namespace crisscross::fixtures
