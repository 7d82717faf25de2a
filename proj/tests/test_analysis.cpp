#include <doctest.h>

#include <cmath>
#include <vector>

#include "crisscross/analysis.hpp"
#include "crisscross/errors.hpp"

using namespace crisscross;
using namespace crisscross::analysis;

TEST_CASE("encoder redundancy at the worked parameters") {
    const auto row = analyze_point(CodeParams{9, 7}, CodecOptions{true});
    CHECK(row.k3 == 2);
    CHECK(row.encoder_redundancy == 32);
    CHECK(row.message_length == 49);

    const auto small = analyze_point(CodeParams{11, 3});
    CHECK(small.k3 == 1);
    CHECK(small.encoder_redundancy == 41);
}

TEST_CASE("bounds") {
    CHECK(lower_bound(9, 7) == doctest::Approx(18 + 2 * std::log(9.0) / std::log(7.0) - 3).epsilon(1e-12));
    CHECK(upper_bound(11, 3) ==
          doctest::Approx(22 + 2 * std::log(11.0) / std::log(3.0) + 9 * std::log(1.5) / std::log(3.0) + 12)
              .epsilon(1e-12));
}

TEST_CASE("both inequalities over the swept grid") {
    const std::vector<Symbol> qs{3, 4, 5, 7, 11, 101};
    const auto rows = analyze(11, 64, qs);
    CHECK(rows.size() == 54 * qs.size());
    for (const auto& r : rows) {
        REQUIRE(r.meets_upper_bound());
        REQUIRE(r.meets_lower_bound());
        REQUIRE(r.encoder_redundancy == static_cast<long long>(4 * r.n - 2 - r.k3));
        REQUIRE(r.gap == doctest::Approx(static_cast<double>(r.encoder_redundancy) - r.lower_bound));
    }
}

TEST_CASE("analyze validates its range") {
    const std::vector<Symbol> qs{3};
    CHECK_THROWS_AS((void)analyze(10, 20, qs), InvalidArgument);
    CHECK_THROWS_AS((void)analyze(20, 11, qs), InvalidArgument);
    CHECK_THROWS_AS((void)analyze(11, kMaxAnalysisN + 1, qs), InvalidArgument);
    const std::vector<Symbol> bad{2};
    CHECK_THROWS_AS((void)analyze(11, 12, bad), InvalidArgument);
    CHECK_THROWS_AS((void)analyze(11, 12, std::vector<Symbol>{}), InvalidArgument);
}

TEST_CASE("csv header names the fields in order") {
    const std::vector<Symbol> qs{3};
    const auto csv = format_csv(analyze(11, 11, qs));
    CHECK(csv ==
          "n,q,k1,k2,k3,message_length,encoder_redundancy,lower_bound,upper_bound,gap\n"
          "11,3,2,1,1,80,41,23.365317,41.686949,17.634683\n");
}
