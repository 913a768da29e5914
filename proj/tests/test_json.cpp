#include <string>

#include "doctest.h"
#include "sge/certificate_io.hpp"
#include "sge/construct.hpp"

using namespace sge;

namespace {

// Parses text expecting failure and returns the reported JSON path.
std::string where_of(const std::string& text) {
    try {
        certificate_from_json(text);
    } catch (const certificate_parse_error& e) {
        return e.where();
    }
    FAIL("expected a parse error");
    return {};
}

const char* kTiny = R"({
  "grid": {"n": 2, "m": 2},
  "S": [[1, 1], [1, 2], [2, 1]],
  "paths": [
    {"pair": [[1, 1], [2, 1]], "waypoints": [[1, 1], [2, 1]]},
    {"pair": [[1, 2], [2, 1]], "waypoints": [[1, 2], [2, 2], [2, 1]]}
  ]
})";

}  // namespace

TEST_CASE("serialization round-trips and is deterministic") {
    const Certificate c = construct_p4(11);
    const std::string text = to_json(c);
    const Certificate back = certificate_from_json(text);
    CHECK(back == c);
    CHECK(to_json(back) == text);
}

TEST_CASE("parser accepts the documented schema") {
    Certificate c = certificate_from_json(kTiny);
    CHECK(c.grid == GridSpec(2, 2));
    CHECK(c.s.size() == 3);
    REQUIRE(c.paths.size() == 2);
    CHECK(c.paths[1].path.vertices.size() == 3);
}

TEST_CASE("parse errors carry the JSON path of the offending field") {
    CHECK(where_of("{ not json") == "$");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": []})") == "$.paths");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [], "paths": [], "notes": 1})") ==
          "$.notes");
    CHECK(where_of(R"({"grid": {"n": 2}, "S": [], "paths": []})") == "grid.m");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 0}, "S": [], "paths": []})") == "grid");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2.5}, "S": [], "paths": []})") == "grid.m");
}

TEST_CASE("parser rejects bad vertices with 1-based guidance") {
    // 0-based coordinates are the classic off-by-one; the message says so.
    std::string text = R"({"grid": {"n": 2, "m": 2}, "S": [[0, 1]], "paths": []})";
    try {
        certificate_from_json(text);
        FAIL("expected a parse error");
    } catch (const certificate_parse_error& e) {
        CHECK(e.where() == "S[0]");
        CHECK(std::string(e.what()).find("1-based") != std::string::npos);
    }
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, "a"]], "paths": []})") == "S[0][1]");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1], [1, 1]], "paths": []})") ==
          "S[1]");
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1, 1]], "paths": []})") == "S[0]");
}

TEST_CASE("parser rejects malformed path entries") {
    // Endpoint missing from S.
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1]],
        "paths": [{"pair": [[1, 1], [2, 1]], "waypoints": [[1, 1], [2, 1]]}]})") ==
          "paths[0].pair");
    // Identical endpoints.
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1], [2, 1]],
        "paths": [{"pair": [[1, 1], [1, 1]], "waypoints": [[1, 1], [2, 1]]}]})") ==
          "paths[0].pair");
    // Too short a waypoint list.
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1], [2, 1]],
        "paths": [{"pair": [[1, 1], [2, 1]], "waypoints": [[1, 1]]}]})") ==
          "paths[0].waypoints");
    // Consecutive waypoints that are not grid neighbours.
    CHECK(where_of(R"({"grid": {"n": 3, "m": 2}, "S": [[1, 1], [3, 1]],
        "paths": [{"pair": [[1, 1], [3, 1]], "waypoints": [[1, 1], [3, 1]]}]})") ==
          "paths[0].waypoints[1]");
    // Waypoints that run between the wrong vertices.
    CHECK(where_of(R"({"grid": {"n": 3, "m": 2}, "S": [[1, 1], [3, 1]],
        "paths": [{"pair": [[1, 1], [3, 1]], "waypoints": [[1, 1], [2, 1]]}]})") ==
          "paths[0].waypoints");
    // Unknown key inside a path entry.
    CHECK(where_of(R"({"grid": {"n": 2, "m": 2}, "S": [[1, 1], [2, 1]],
        "paths": [{"pair": [[1, 1], [2, 1]], "waypoints": [[1, 1], [2, 1]], "color": 3}]})") ==
          "paths[0].color");
}

TEST_CASE("schema-level defects beyond parsing are left to verify") {
    // A duplicate pair parses fine; verify() is the tool that flags it.
    Certificate c = certificate_from_json(R"({
        "grid": {"n": 2, "m": 2},
        "S": [[1, 1], [2, 1]],
        "paths": [
            {"pair": [[1, 1], [2, 1]], "waypoints": [[1, 1], [2, 1]]},
            {"pair": [[2, 1], [1, 1]], "waypoints": [[1, 1], [2, 1]]}
        ]
    })");
    CHECK(c.paths.size() == 2);
}
