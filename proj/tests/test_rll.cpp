#include <doctest.h>

#include <random>
#include <set>

#include "crisscross/errors.hpp"
#include "crisscross/rll_suffix.hpp"
#include "oracles.hpp"

using namespace crisscross;

namespace {

const Sequence kWorked1d({4, 2, 1, 4, 5, 2, 1, 0, 2}, 7);
const rll::Params kWorked1dParams{7, 2, 7, 0, {0, 2}};
const rll::EncodeOptions kRelaxed{true};

std::vector<Symbol> random_payload(std::size_t len, Symbol q, std::mt19937_64& rng) {
    std::uniform_int_distribution<Symbol> d(0, q - 2);
    std::vector<Symbol> v(len);
    for (auto& s : v) {
        s = d(rng);
    }
    return v;
}

} // namespace

TEST_CASE("index sets") {
    const auto a = rll::index_sets(7, 7, true);
    CHECK(a.t == 1);
    CHECK(a.powers == std::vector<std::size_t>{1, 6});
    CHECK(a.steering == std::vector<std::size_t>{4, 5, 7});
    CHECK(a.data == std::vector<std::size_t>{2, 3});

    const auto b = rll::index_sets(12, 3);
    CHECK(b.t == 3);
    CHECK(b.powers == std::vector<std::size_t>{1, 2, 4, 8});
    CHECK(b.steering == std::vector<std::size_t>{10, 11, 12});
    CHECK(b.data == std::vector<std::size_t>{3, 5, 6, 7, 9});

    const auto c = rll::index_sets(8, 9);
    CHECK(c.t == 1);
    CHECK(c.powers == std::vector<std::size_t>{1, 8});
    CHECK(c.steering == std::vector<std::size_t>{5, 6, 7});
    CHECK(c.data == std::vector<std::size_t>{2, 3, 4});

    CHECK_THROWS_AS((void)rll::index_sets(7, 7), InvalidArgument);
    CHECK_THROWS_AS((void)rll::index_sets(8, 2), InvalidArgument);
}

TEST_CASE("index sets partition [1,n] and satisfy the size bounds") {
    for (Symbol q = 3; q <= 12; ++q) {
        for (std::size_t n = 8; n <= 400; ++n) {
            const auto s = rll::index_sets(n, q);
            std::set<std::size_t> all;
            all.insert(s.powers.begin(), s.powers.end());
            all.insert(s.steering.begin(), s.steering.end());
            all.insert(s.data.begin(), s.data.end());
            REQUIRE(all.size() == n);
            REQUIRE(*all.begin() == 1);
            REQUIRE(*all.rbegin() == n);
            REQUIRE(s.steering.size() == 3);
            REQUIRE(s.data.size() == n - s.t - 4);
            REQUIRE(s.steering[0] >= n - 3);
            REQUIRE(rll::data_length(n, q) == s.data.size());
        }
    }
}

TEST_CASE("worked encoding example with intermediates") {
    rll::EncodeTrace trace;
    const std::vector<Symbol> data{0, 3};
    const auto x = rll::encode(data, kWorked1dParams, kRelaxed, &trace);
    CHECK(x == kWorked1d);
    CHECK(trace.g1 == 31);
    CHECK(trace.e == std::array<std::uint64_t, 3>{5, 2, 0});
    CHECK(trace.g4 == 1);
    CHECK(trace.h == std::vector<Symbol>{1, 0});
    CHECK(trace.differential == Sequence({2, 1, 4, 6, 3, 1, 1, 5, 2}, 7));
}

TEST_CASE("the worked example needs the relaxed gate") {
    const std::vector<Symbol> data{0, 3};
    CHECK_THROWS_AS((void)rll::encode(data, kWorked1dParams), InvalidArgument);
}

TEST_CASE("encode validates its inputs") {
    const rll::Params p{8, 1, 3, 0, {0}};
    CHECK_THROWS_AS((void)rll::encode(std::vector<Symbol>{0, 0}, p), InvalidArgument);
    CHECK_THROWS_AS((void)rll::encode(std::vector<Symbol>{2}, p), InvalidArgument);
    CHECK_THROWS_AS((void)rll::encode(std::vector<Symbol>{0}, rll::Params{8, 4, 3, 0, {0, 1, 0, 1}}),
                    InvalidArgument);
    CHECK_THROWS_AS((void)rll::encode(std::vector<Symbol>{0}, rll::Params{8, 2, 3, 0, {1, 1}}), InvalidArgument);
}

TEST_CASE("all-zero data at n = 8, q = 3, m = 1") {
    // t = 3 here since 2^3 = 8, leaving a single data position.
    const rll::Params p{8, 1, 3, 0, {0}};
    REQUIRE(rll::data_length(8, 3) == 1);
    const std::vector<Symbol> data(1, 0);
    const auto x = rll::encode(data, p);
    CHECK(rll::is_member(x, p));
    CHECK(rll::recover_data(x, p) == data);
}

TEST_CASE("membership conditions") {
    CHECK(rll::is_member(kWorked1d, kWorked1dParams));
    CHECK_FALSE(rll::is_member(Sequence({4, 2, 1, 4, 5, 2, 1, 0, 1}, 7), kWorked1dParams));
    CHECK_FALSE(rll::is_member(Sequence({4, 4, 1, 4, 5, 2, 1, 0, 2}, 7), kWorked1dParams));
    CHECK_THROWS_AS((void)rll::is_member(Sequence({4, 2, 1}, 7), kWorked1dParams), InvalidArgument);
}

TEST_CASE("positional decoding") {
    const auto first = rll::decode(kWorked1d.with_deletion(1), kWorked1dParams);
    CHECK(first.codeword == kWorked1d);
    CHECK(first.position == 1);
    const auto last = rll::decode(kWorked1d.with_deletion(9), kWorked1dParams);
    CHECK(last.codeword == kWorked1d);
    CHECK(last.position == 9);
}

TEST_CASE("recover_data inverts the worked example") {
    CHECK(rll::recover_data(kWorked1d, kWorked1dParams, true) == std::vector<Symbol>{0, 3});
    CHECK_THROWS_AS((void)rll::recover_data(Sequence({4, 4, 1, 4, 5, 2, 1, 0, 2}, 7), kWorked1dParams, true),
                    NotACodeword);
}

TEST_CASE("exhaustive at n = 8, q = 3, m = 1 and n = 9, q = 3, m = 2: injective, every deletion recovered") {
    const rll::Params p{8, 1, 3, 0, {0}};
    std::set<std::vector<Symbol>> images;
    for (Symbol f1 = 0; f1 < 2; ++f1) {
        const std::vector<Symbol> data{f1};
        const auto x = rll::encode(data, p);
        REQUIRE(rll::is_member(x, p));
        images.insert(x.vector());
        for (std::size_t pos = 1; pos <= 9; ++pos) {
            const auto r = rll::decode(x.with_deletion(pos), p);
            REQUIRE(r.codeword == x);
            REQUIRE(r.position == pos);
            REQUIRE(rll::recover_data(r.codeword, p) == data);
        }
    }
    CHECK(images.size() == 2);

    const rll::Params wide{9, 2, 3, 0, {0, 2}};
    REQUIRE(rll::data_length(9, 3) == 2);
    images.clear();
    for (Symbol f1 = 0; f1 < 2; ++f1) {
        for (Symbol f2 = 0; f2 < 2; ++f2) {
            const std::vector<Symbol> data{f1, f2};
            const auto x = rll::encode(data, wide);
            REQUIRE(rll::is_member(x, wide));
            images.insert(x.vector());
            for (std::size_t pos = 1; pos <= 11; ++pos) {
                const auto r = rll::decode(x.with_deletion(pos), wide);
                REQUIRE(r.codeword == x);
                REQUIRE(r.position == pos);
                REQUIRE(rll::recover_data(r.codeword, wide) == data);
            }
        }
    }
    CHECK(images.size() == 4);
}

TEST_CASE("random round trips at n = 12, q = 3, m = 3") {
    const rll::Params p{12, 3, 3, 0, {0, 1, 2}};
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto data = random_payload(rll::data_length(12, 3), 3, rng);
        const auto x = rll::encode(data, p);
        REQUIRE(rll::is_member(x, p));
        REQUIRE(rll::recover_data(x, p) == data);
    }
}

TEST_CASE("random round trips through a deletion at n = 12, q = 5") {
    const rll::Params p{12, 2, 5, 0, {0, 2}};
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto data = random_payload(rll::data_length(12, 5), 5, rng);
        const auto x = rll::encode(data, p);
        const std::size_t pos = 1 + static_cast<std::size_t>(rng() % x.size());
        const auto r = rll::decode(x.with_deletion(pos), p);
        REQUIRE(r.position == pos);
        REQUIRE(rll::recover_data(r.codeword, p) == data);
    }
}

TEST_CASE("every residue and every admissible suffix in the proven range") {
    std::mt19937_64 rng(13);
    for (Symbol q : {3u, 4u, 5u, 7u}) {
        for (std::size_t n : {8u, 9u, 15u, 40u}) {
            for (const auto& suffix : std::vector<std::vector<Symbol>>{{0}, {1, 0}, {0, 2}, {2, 1, 2}, {0, 1, 2}}) {
                const std::size_t m = suffix.size();
                for (std::uint64_t a = 0; a < q * (n + m); ++a) {
                    const rll::Params p{n, m, q, a, suffix};
                    const auto data = random_payload(rll::data_length(n, q), q, rng);
                    const auto x = rll::encode(data, p);
                    REQUIRE(rll::is_member(x, p));
                    REQUIRE(rll::recover_data(x, p) == data);
                }
            }
        }
    }
}
