#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "pleth/io.hpp"
#include "pleth/partition.hpp"
#include "pleth/tableau.hpp"
#include "pleth/type_tableau.hpp"

using namespace pleth;

TEST_CASE("conjugate examples and involution") {
    CHECK(conjugate({3}) == Partition{1, 1, 1});
    CHECK(conjugate({2, 1}) == Partition{2, 1});
    CHECK(conjugate({5, 5, 3, 2}) == Partition{4, 4, 3, 2, 2});

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        Partition p;
        int budget = static_cast<int>(rng() % 31);
        int cap = budget;
        while (budget > 0 && cap > 0) {
            int part = 1 + static_cast<int>(rng() % cap);
            p.push_back(part);
            budget -= part;
            cap = std::min(cap, part);
        }
        std::sort(p.rbegin(), p.rend());
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(weight(conjugate(p)) == weight(p));
    }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6, 3).size() == 7);
    CHECK_THROWS_AS(normalized({1, 2}), std::invalid_argument);
}

TEST_CASE("ssyt enumeration matches closed Kostka form") {
    CHECK(enumerate_ssyt({4, 2}, {2, 2, 2}).size() == 3);
    CHECK(enumerate_ssyt({3}, {3, 0, 0}).size() == 1);
    auto forced = enumerate_ssyt({2, 2, 2}, {2, 2, 2});
    REQUIRE(forced.size() == 1);
    CHECK(forced[0] == parse_tableau("11;22;33"));

    CHECK(kostka_n3({8, 6, 1}, 5) == 3);
    CHECK(kostka_n3({12}, 4) == 1);
    CHECK(kostka_n3({6, 3}, 3) == 4);
    CHECK(kostka_n3({4, 2}, 3) == 0);   // wrong weight
    CHECK(kostka_n3({3, 2, 2, 2}, 3) == 0);

    for (int n = 1; n <= 8; ++n) {
        for (const Partition& mu : partitions_of(3 * n, 3)) {
            CHECK(static_cast<long long>(enumerate_ssyt(mu, content_n3(n)).size()) ==
                  kostka_n3(mu, n));
        }
    }
}

TEST_CASE("standard type tableaux") {
    CHECK(enumerate_syt(1).size() == 1);
    CHECK(enumerate_syt(2).size() == 2);
    auto syt3 = enumerate_syt(3);
    REQUIRE(syt3.size() == 4);
    std::multiset<Partition> shapes;
    for (TypeT t : syt3) shapes.insert(type_shape(t));
    CHECK(shapes == std::multiset<Partition>{{3}, {2, 1}, {2, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(enumerate_syt(4), std::invalid_argument);

    CHECK(count_f({3}) == 1);
    CHECK(count_f({2, 1}) == 2);
    CHECK(count_f({1, 1, 1}) == 1);

    CHECK(type_name(TypeT::H12) == "13/2");
    CHECK(conjugate_type(TypeT::R3) == TypeT::C3);
    CHECK(conjugate_type(TypeT::H21) == TypeT::H12);
    CHECK(conjugate_type(TypeT::R2) == TypeT::C2);
    for (TypeT t : enumerate_syt(3)) CHECK(conjugate_type(conjugate_type(t)) == t);
    CHECK(restrict2(TypeT::R3) == TypeT::R2);
    CHECK(restrict2(TypeT::H21) == TypeT::R2);
    CHECK(restrict2(TypeT::H12) == TypeT::C2);
    CHECK(restrict2(TypeT::C3) == TypeT::C2);
}

TEST_CASE("restrict") {
    Tableau t = parse_tableau("1123;23");
    CHECK(restrict_to(t, 2) == parse_tableau("112;2"));
    CHECK(restrict_to(t, 3) == t);
    CHECK(restrict_to(parse_tableau("1122;33"), 1) == parse_tableau("11"));
    auto c = content_of(t);
    auto r = content_of(restrict_to(t, 2));
    CHECK(std::vector<int>(c.begin(), c.begin() + 2) == r);
}

TEST_CASE("concat_rows") {
    auto got = concat_rows(parse_tableau("112;23;3"), parse_tableau("1123;23"));
    REQUIRE(got.has_value());
    CHECK(*got == parse_tableau("1111223;2233;3"));

    Tableau t = parse_tableau("1123;23");
    CHECK(concat_rows(t, Tableau{}) == t);
    auto cols = concat_rows(parse_tableau("1;2;3"), parse_tableau("11;22;33"));
    REQUIRE(cols.has_value());
    CHECK(*cols == parse_tableau("111;222;333"));
    // Merging straight-shape tableaux row-wise preserves column strictness.
    auto merged = concat_rows(parse_tableau("11;22"), parse_tableau("2"));
    REQUIRE(merged.has_value());
    CHECK(*merged == parse_tableau("112;22"));

    // Adding a single row 1..3 always succeeds on content-(n)^3 tableaux.
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(3 * n, 3)) {
            for (const Tableau& s : enumerate_ssyt(mu, content_n3(n)))
                CHECK(concat_rows(s, parse_tableau("123")).has_value());
        }
    }
}

namespace {

Tableau random_skew(std::mt19937& rng) {
    // Random outer shape (<= 12 cells), random inner subshape, greedy fill.
    Partition outer;
    int budget = 1 + static_cast<int>(rng() % 12);
    int cap = budget;
    while (budget > 0 && cap > 0) {
        int part = 1 + static_cast<int>(rng() % cap);
        outer.push_back(part);
        budget -= part;
        cap = std::min(cap, part);
    }
    std::sort(outer.rbegin(), outer.rend());
    Tableau t;
    int prev_inner = outer[0];
    for (size_t r = 0; r < outer.size(); ++r) {
        int inner = static_cast<int>(rng() % (std::min(prev_inner, outer[r]) + 1));
        prev_inner = inner;
        if (inner == outer[r]) continue;  // skip empty rows
        int k = t.nrows();
        t.inner.push_back(inner);
        t.rows.emplace_back();
        for (int c = inner; c < outer[r]; ++c) {
            int lo = 1;
            if (c > inner) lo = std::max(lo, t.rows[k].back());
            if (k > 0 && c >= t.inner_at(k - 1) && c < t.outer_at(k - 1))
                lo = std::max(lo, t.rows[k - 1][c - t.inner_at(k - 1)] + 1);
            t.rows[k].push_back(lo + static_cast<int>(rng() % 3));
        }
    }
    if (t.rows.empty()) t.rows = {{1}};
    return t;
}

}  // namespace

TEST_CASE("jeu de taquin rectification") {
    Tableau skew;
    skew.inner = {2, 2, 1};
    skew.rows = {{1}, {2}, {1, 3}, {2, 4}};
    REQUIRE(is_semistandard(skew));
    CHECK(jdt_rectify(skew) == parse_tableau("11;22;3;4"));

    Tableau straight = parse_tableau("1123;23");
    CHECK(jdt_rectify(straight) == straight);

    Tableau one_row;
    one_row.inner = {1};
    one_row.rows = {{1, 1}};
    CHECK(jdt_rectify(one_row) == parse_tableau("11"));

    std::mt19937 rng(999);
    for (int trial = 0; trial < 500; ++trial) {
        Tableau t = random_skew(rng);
        REQUIRE(is_semistandard(t));
        std::mt19937 r1(trial), r2(trial + 70000);
        auto pick1 = [&](const std::vector<int>& cands) {
            return static_cast<int>(r1() % cands.size());
        };
        auto pick2 = [&](const std::vector<int>& cands) {
            return static_cast<int>(r2() % cands.size());
        };
        Tableau a = jdt_rectify_order(t, pick1);
        Tableau b = jdt_rectify_order(t, pick2);
        CHECK(a == b);
        CHECK(a == jdt_rectify(t));
        CHECK(a.straight());
        CHECK(is_semistandard(a));
        CHECK(content_of(a) == content_of(t));
    }
}

TEST_CASE("transpose") {
    Tableau t = parse_tableau("1123;23");
    CHECK(transpose(transpose(t)) == t);
    CHECK(outer_shape(transpose(t)) == conjugate(outer_shape(t)));
    CHECK(is_conjugate_semistandard(transpose(t)));
}
