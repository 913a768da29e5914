#include "sge/certificate_io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "json.hpp"

namespace sge {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw certificate_parse_error(where, what);
}

void expect_fields(const json& obj, const std::string& where,
                   std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* name : allowed)
            if (it.key() == name) known = true;
        if (!known) fail(where + "." + it.key(), "unknown field");
    }
    for (const char* name : allowed)
        if (!obj.contains(name)) fail(where + "." + name, "missing field");
}

int parse_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    auto raw = v.get<long long>();
    if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max())
        fail(where, "integer out of range");
    return static_cast<int>(raw);
}

Vertex parse_vertex(const json& v, const GridSpec& grid, const std::string& where) {
    if (!v.is_array() || v.size() != 2) fail(where, "expected a coordinate pair [x,y]");
    Vertex out{parse_int(v[0], where + "[0]"), parse_int(v[1], where + "[1]")};
    if (!grid.contains(out))
        fail(where, "vertex " + to_string(out) + " outside the " + std::to_string(grid.n) +
                        "x" + std::to_string(grid.m) + " grid (coordinates are 1-based)");
    return out;
}

ordered_json vertex_json(Vertex v) { return ordered_json::array({v.x, v.y}); }

}  // namespace

certificate_parse_error::certificate_parse_error(std::string where, const std::string& what)
    : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

std::string to_json(const Certificate& c) {
    ordered_json root;
    root["grid"] = ordered_json{{"n", c.grid.n}, {"m", c.grid.m}};
    auto s = ordered_json::array();
    for (Vertex v : c.s) s.push_back(vertex_json(v));
    root["S"] = std::move(s);
    auto paths = ordered_json::array();
    for (const Assignment& asg : c.paths) {
        ordered_json entry;
        entry["pair"] = ordered_json::array({vertex_json(asg.a), vertex_json(asg.b)});
        auto waypoints = ordered_json::array();
        for (Vertex v : asg.path.vertices) waypoints.push_back(vertex_json(v));
        entry["waypoints"] = std::move(waypoints);
        paths.push_back(std::move(entry));
    }
    root["paths"] = std::move(paths);
    return root.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json root = json::parse(text, nullptr, false);
    if (root.is_discarded()) fail("$", "not valid JSON");
    expect_fields(root, "$", {"grid", "S", "paths"});

    expect_fields(root["grid"], "grid", {"n", "m"});
    int n = parse_int(root["grid"]["n"], "grid.n");
    int m = parse_int(root["grid"]["m"], "grid.m");
    if (n < 1 || m < 1) fail("grid", "grid needs at least one column and one row");

    Certificate c;
    c.grid = GridSpec(n, m);

    if (!root["S"].is_array()) fail("S", "expected an array");
    std::set<Vertex> s_set;
    for (std::size_t i = 0; i < root["S"].size(); ++i) {
        const std::string where = "S[" + std::to_string(i) + "]";
        Vertex v = parse_vertex(root["S"][i], c.grid, where);
        if (!s_set.insert(v).second) fail(where, "duplicate vertex " + to_string(v) + " in S");
        c.s.push_back(v);
    }

    if (!root["paths"].is_array()) fail("paths", "expected an array");
    for (std::size_t i = 0; i < root["paths"].size(); ++i) {
        const std::string where = "paths[" + std::to_string(i) + "]";
        expect_fields(root["paths"][i], where, {"pair", "waypoints"});

        const json& pair = root["paths"][i]["pair"];
        if (!pair.is_array() || pair.size() != 2) fail(where + ".pair", "expected two endpoints");
        Assignment asg;
        asg.a = parse_vertex(pair[0], c.grid, where + ".pair[0]");
        asg.b = parse_vertex(pair[1], c.grid, where + ".pair[1]");
        if (asg.a == asg.b) fail(where + ".pair", "endpoints must differ");
        for (Vertex v : {asg.a, asg.b})
            if (!s_set.count(v))
                fail(where + ".pair", "endpoint " + to_string(v) + " not in S");

        const json& waypoints = root["paths"][i]["waypoints"];
        if (!waypoints.is_array() || waypoints.size() < 2)
            fail(where + ".waypoints", "expected at least two waypoints");
        for (std::size_t j = 0; j < waypoints.size(); ++j)
            asg.path.vertices.push_back(
                parse_vertex(waypoints[j], c.grid, where + ".waypoints[" + std::to_string(j) + "]"));
        for (std::size_t j = 0; j + 1 < asg.path.vertices.size(); ++j)
            if (!c.grid.adjacent(asg.path.vertices[j], asg.path.vertices[j + 1]))
                fail(where + ".waypoints[" + std::to_string(j + 1) + "]",
                     "not adjacent to the previous waypoint");
        auto ends = std::minmax(asg.path.vertices.front(), asg.path.vertices.back());
        if (ends != std::minmax(asg.a, asg.b))
            fail(where + ".waypoints", "sequence does not run between the pair's endpoints");
        c.paths.push_back(std::move(asg));
    }
    return c;
}

}  // namespace sge
