#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "terncode/gf3.hpp"

using namespace terncode;

TEST_CASE("field tables agree with arithmetic mod 3") {
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            CHECK(gf3_add(a, b) == (a + b) % 3);
            CHECK(gf3_sub(a, b) == ((a - b) % 3 + 3) % 3);
            CHECK(gf3_mul(a, b) == a * b % 3);
        }
        CHECK(gf3_add(a, gf3_neg(a)) == 0);
        if (a != 0) CHECK(gf3_mul(a, gf3_inv(a)) == 1);
    }
}

TEST_CASE("weight counts nonzero entries") {
    CHECK(weight(TritVec{}) == 0);
    CHECK(weight(TritVec{0, 0, 0}) == 0);
    CHECK(weight(TritVec{0, 1, 2, 0, 1}) == 3);
}

TEST_CASE("inner products") {
    const TritVec ones{1, 1, 1};
    CHECK(inner_product(ones, ones) == 0);
    CHECK(inner_product(TritVec{1, 2, 0}, ones) == 0);
    CHECK(inner_product(TritVec{1, 1, 0}, TritVec{1, 1, 0}) == 2);
    CHECK_THROWS_AS(inner_product(TritVec{1}, ones), ArgumentError);
}

TEST_CASE("add_scaled and scaled") {
    TritVec y{1, 0, 2};
    add_scaled(y, TritVec{1, 1, 1}, 2);
    CHECK(y == TritVec{0, 2, 1});
    add_scaled(y, TritVec{2, 2, 2}, 0);
    CHECK(y == TritVec{0, 2, 1});
    CHECK(scaled(TritVec{0, 1, 2}, 2) == TritVec{0, 2, 1});
}

TEST_CASE("append_row fixes the width of an empty matrix") {
    TritMatrix m;
    m.append_row(TritVec{1, 2, 0});
    CHECK(m.rows == 1);
    CHECK(m.cols == 3);
    CHECK_THROWS_AS(m.append_row(TritVec{1, 2}), ArgumentError);
}

TEST_CASE("from_rows validates shape and entries") {
    CHECK_THROWS_AS(TritMatrix::from_rows({}), ArgumentError);
    CHECK_THROWS_AS(TritMatrix::from_rows({{1, 2}, {1}}), ArgumentError);
    CHECK_THROWS_AS(TritMatrix::from_rows({{1, 3}}), ArgumentError);
}

TEST_CASE("rref collapses dependent rows and orders pivots") {
    TritMatrix dependent = TritMatrix::from_rows({{1, 1, 1}, {2, 2, 2}});
    CHECK(rref_in_place(dependent) == 1);
    CHECK(TritVec(dependent.row(0).begin(), dependent.row(0).end()) == TritVec{1, 1, 1});
    CHECK(weight(dependent.row(1)) == 0);

    TritMatrix swapped = TritMatrix::from_rows({{0, 1, 2}, {1, 0, 1}});
    CHECK(rref_in_place(swapped) == 2);
    CHECK(swapped == TritMatrix::from_rows({{1, 0, 1}, {0, 1, 2}}));
}

TEST_CASE("rref is idempotent and rank is basis-independent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> trit(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        TritMatrix m(4, 7);
        for (Trit& t : m.data) t = static_cast<Trit>(trit(rng));
        const TritMatrix once = rref(m);
        CHECK(rref(once) == once);
        CHECK(rank(once) == rank(m));
    }
}

TEST_CASE("pivot_columns reads the staircase") {
    const TritMatrix m = rref(TritMatrix::from_rows({{0, 1, 2, 0}, {0, 0, 0, 1}}));
    CHECK(pivot_columns(m, 2) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("nullspace spans the solution set") {
    const TritMatrix ns = nullspace(TritMatrix::from_rows({{1, 1, 1}}));
    CHECK(ns.rows == 2);
    CHECK(ns == TritMatrix::from_rows({{1, 0, 2}, {0, 1, 2}}));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> trit(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        TritMatrix a(3, 6);
        for (Trit& t : a.data) t = static_cast<Trit>(trit(rng));
        const TritMatrix basis = nullspace(a);
        CHECK(basis.rows + rank(a) == a.cols);
        CHECK(rank(basis) == basis.rows);
        for (std::size_t b = 0; b < basis.rows; ++b) {
            for (std::size_t i = 0; i < a.rows; ++i) {
                CHECK(inner_product(a.row(i), basis.row(b)) == 0);
            }
        }
    }
}

TEST_CASE("standard form splits pivot and free columns") {
    const StandardForm sf = to_standard_form(TritMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}}));
    CHECK(sf.col_order == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(sf.a == TritMatrix::from_rows({{1, 1}, {1, 2}}));

    const StandardForm gap = to_standard_form(TritMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(gap.col_order == std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(gap.a == TritMatrix::identity(2));

    CHECK_THROWS_AS(to_standard_form(TritMatrix::from_rows({{1, 1, 1}, {2, 2, 2}})), ArgumentError);
}

TEST_CASE("codeword enumeration is exhaustive and ordered by message") {
    const TritMatrix g = TritMatrix::from_rows({{1, 0, 1}, {0, 1, 2}});
    std::vector<std::string> words;
    for_each_codeword(g, 4, [&](std::span<const Trit> w) { words.emplace_back(to_string(w)); });
    REQUIRE(words.size() == 9);
    CHECK(words[0] == "000");
    CHECK(words[1] == "012");
    CHECK(words[2] == "021");
    CHECK(words[3] == "101");
    std::sort(words.begin(), words.end());
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());

    std::size_t calls = 0;
    for_each_codeword(TritMatrix(0, 5), 4, [&](std::span<const Trit> w) {
        ++calls;
        CHECK(weight(w) == 0);
    });
    CHECK(calls == 1);

    CHECK_THROWS_AS(for_each_codeword(TritMatrix::identity(5), 4, [](std::span<const Trit>) {}),
                    CapacityError);
}

TEST_CASE("weight histogram of the tetracode generator") {
    const TritMatrix g = TritMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(weight_histogram(g, 4) == std::vector<std::uint64_t>{1, 0, 0, 8, 0});
}

TEST_CASE("string conversions round-trip and reject junk") {
    CHECK(trits_from_string("0121") == TritVec{0, 1, 2, 1});
    CHECK(to_string(TritVec{0, 1, 2, 1}) == "0121");
    CHECK(trits_from_string("") == TritVec{});
    CHECK_THROWS_AS(trits_from_string("013"), ArgumentError);
    CHECK_THROWS_AS(trits_from_string("1 2"), ArgumentError);
}
