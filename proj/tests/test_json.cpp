#include <doctest.h>

#include <json.hpp>

#include "ladet/ladder_json.hpp"
#include "suite.hpp"

using namespace ladet;

TEST_CASE("document parsing") {
    nlohmann::json j = nlohmann::json::parse(R"({
        "m": 3, "n": 3,
        "upper": [[1, 3]],
        "lower": [[2, 1], [3, 2]],
        "t": [2, 2],
        "field_prime": 101,
        "buchberger_budget": 500,
        "expected_height": 3
    })");
    LadderDocument doc = parse_document(j);
    CHECK(doc.field_prime == 101);
    CHECK(doc.buchberger_budget == 500);
    CHECK(doc.cover_cap == kDefaultCoverCap);
    REQUIRE(doc.expected_height.has_value());
    CHECK(*doc.expected_height == 3);
    CHECK(doc.to_ladder().same_shape(suite::get("twosided_3x3")));
}

TEST_CASE("missing and malformed keys are reported") {
    CHECK_THROWS_AS(parse_document(nlohmann::json::parse(R"({"m": 2})")), DocumentError);
    CHECK_THROWS_AS(
        parse_document(nlohmann::json::parse(
            R"({"m": 2, "n": 2, "upper": [[1]], "lower": [[2, 1]], "t": [1]})")),
        DocumentError);
    CHECK_THROWS_AS(
        parse_document(nlohmann::json::parse(
            R"({"m": 2, "n": 2, "upper": [[1, 2]], "lower": [[2, 1]], "t": [1], "field_prime": 10})")),
        std::invalid_argument);
}

TEST_CASE("ladder round trip through the document form") {
    for (const auto& entry : suite::all()) {
        CAPTURE(entry.name);
        nlohmann::ordered_json j = ladder_json(entry.ladder);
        LadderDocument doc = parse_document(nlohmann::json::parse(j.dump()));
        CHECK(doc.to_ladder().same_shape(entry.ladder));
    }
}
