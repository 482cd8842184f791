#include "doctest.h"
#include "support.hpp"

#include "rokhlin/catalog.hpp"
#include "rokhlin/errors.hpp"
#include "rokhlin/serialization.hpp"

using namespace testing;
namespace cat = rokhlin::catalog;

#ifndef ROKHLIN_FIXTURE_DIR
#error "ROKHLIN_FIXTURE_DIR must be defined"
#endif

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(ROKHLIN_FIXTURE_DIR) / name; }

}  // namespace

TEST_CASE("fixtures load as the catalog systems") {
    CHECK(load_system(fixture("doubling.json")) == cat::doubling());
    CHECK(load_system(fixture("tent.json")) == cat::tent());
    CHECK(load_system(fixture("times3.json")) == cat::times3());
    CHECK(load_system(fixture("halfrot.json")) == cat::half_rotation());
    CHECK(load_system(fixture("identity.json")) == cat::identity());
    CHECK(load_system(fixture("broken-slope3.json")) == cat::broken_slope3());
    CHECK(load_system(fixture("skewed-cdf-doubling.json")) == cat::skewed_doubling());
}

TEST_CASE("system json round trip") {
    for (const auto& sys : {cat::doubling(), cat::tent(), cat::skewed_doubling()})
        CHECK(parse_system(to_json(sys).dump()) == sys);
}

TEST_CASE("rationals are strings with decimal shadows") {
    Json j;
    put_rational(j, "x", q("1/3"));
    CHECK(j["x"] == "1/3");
    CHECK(j["x_decimal"].is_number_float());
    CHECK(to_json(set({{"0", "1/4"}, {"1/2", "3/4"}})).dump() == R"([["0","1/4"],["1/2","3/4"]])");
}

TEST_CASE("parse errors carry locations") {
    try {
        parse_system("{\"cdf\": [1,2,");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    const std::string bad_slope = R"({"cdf":{"breakpoints":["0","1"],"values":["0","1"]},
        "map":{"branches":[{"domain":["0","1"],"slope":"two","intercept":"0"}]}})";
    try {
        parse_system(bad_slope);
        FAIL("expected format error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("/map/branches/0/slope") != std::string::npos);
    }
    const std::string numeric = R"({"cdf":{"breakpoints":["0","1"],"values":["0","1"]},
        "map":{"branches":[{"domain":["0","1"],"slope":1,"intercept":"0"}]}})";
    CHECK_THROWS_AS(parse_system(numeric), ParseError);
    const std::string gap = R"({"cdf":{"breakpoints":["0","1"],"values":["0","1"]},
        "map":{"branches":[{"domain":["0","1/2"],"slope":"1","intercept":"0"}]}})";
    try {
        parse_system(gap);
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("/map", 0) == 0);
    }
    CHECK_THROWS_AS(parse_system(R"({"map":{}})"), ParseError);
    CHECK_THROWS_AS(load_system(fixture("no-such-file.json")), ParseError);
}

TEST_CASE("interval sets from json") {
    const Json j = Json::parse(R"([["1/2","3/4"],["0","1/2"]])");
    CHECK(interval_set_from_json(j) == set({{"0", "3/4"}}));
    CHECK_THROWS_AS(interval_set_from_json(Json::parse(R"([["1/2"]])")), ParseError);
    CHECK_THROWS_AS(interval_set_from_json(Json::parse(R"([["3/4","1/2"]])")), ParseError);
    CHECK_THROWS_AS(interval_set_from_json(Json::parse(R"([["x","1/2"]])")), FormatError);
}

TEST_CASE("levels csv") {
    const auto v = verify_tower(cat::doubling(), set({{"5/16", "3/8"}}), 2);
    CHECK(levels_csv(v) == "level_index,interval_lo,interval_hi\n0,5/16,3/8\n1,5/32,3/16\n1,21/32,11/16\n");
}
