#include <doctest.h>

#include <stdexcept>

#include "pleth/io.hpp"
#include "pleth/schur.hpp"

using namespace pleth;

TEST_CASE("partition parsing and formatting") {
    CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
    CHECK(parse_partition("4 2 1") == Partition{4, 2, 1});
    CHECK(parse_partition("7") == Partition{7});
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
    CHECK(format_partition({4, 2, 1}) == "(4,2,1)");
    CHECK(format_partition({}) == "()");
}

TEST_CASE("tableau parsing and formatting") {
    Tableau t = parse_tableau("1123;23");
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 1, 2, 3}, {2, 3}});
    CHECK(parse_tableau("1 1 2 3;2 3") == t);
    CHECK(parse_tableau("2 2;4 4 5 9").rows[1] == std::vector<int>{4, 4, 5, 9});
    CHECK_THROWS_AS(parse_tableau("11;2x"), std::invalid_argument);
    CHECK(format_tableau(t) == "1123/23");
}

TEST_CASE("expansion formatting") {
    SchurExpansion f;
    f.add({4, 2}, 3);
    f.add({5, 1}, 1);
    CHECK(format_expansion(f) == "s(5,1) + 3*s(4,2)");
    CHECK(format_expansion(SchurExpansion{}) == "0");
    CHECK(expansion_csv(f) == "mu,coeff\n5 1,1\n4 2,3\n");
}

TEST_CASE("json round trip") {
    SchurExpansion f;
    f.add({5, 1}, 1);
    f.add({4, 2}, 1);
    f.add({3, 2, 1}, 1);
    std::string json = expansion_json("h", {2}, {2, 1}, f);
    CHECK(json.find("\"basis\":\"h\"") != std::string::npos);
    CHECK(json.find("\"lambda\":[2]") != std::string::npos);
    CHECK(json.find("\"nu\":[2,1]") != std::string::npos);
    // Reverse-lex term order in the serialized form.
    CHECK(json.find("[5,1]") < json.find("[4,2]"));
    CHECK(json.find("[4,2]") < json.find("[3,2,1]"));
    CHECK(expansion_from_json(json) == f);
}
