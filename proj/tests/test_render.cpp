#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sge/construct.hpp"
#include "sge/render.hpp"

using namespace sge;

namespace {

std::string golden(const char* name) {
    std::ifstream in(std::string(SGE_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("rendering is byte-deterministic") {
    const Certificate c = construct_general_corners(6, 5);
    CHECK(render(c, RenderFormat::svg) == render(c, RenderFormat::svg));
    CHECK(render(c, RenderFormat::tikz) == render(c, RenderFormat::tikz));
}

TEST_CASE("rendered output matches the checked-in files") {
    const Certificate c = construct_p2(5);
    CHECK(render(c, RenderFormat::svg) == golden("p2_n5.svg"));
    CHECK(render(c, RenderFormat::tikz) == golden("p2_n5.tikz"));
}

TEST_CASE("svg marks the covering vertices and puts row 1 at the bottom") {
    const Certificate c = construct_p2(5);  // 5 covering vertices of 10
    const std::string svg = render(c, RenderFormat::svg);
    CHECK(count_of(svg, "r=\"8\"") == 5);
    CHECK(count_of(svg, "r=\"3\"") == 5);
    CHECK(count_of(svg, "<polyline") == c.paths.size());
    // (1,1) must be drawn lower on the canvas (larger y) than (1,2).
    CHECK(svg.find("cx=\"30\" cy=\"70\"") != std::string::npos);   // (1,1)
    CHECK(svg.find("cx=\"30\" cy=\"30\"") != std::string::npos);   // (1,2)
    CHECK(count_of(svg, "<svg") == 1);
    CHECK(svg.find("</svg>") == svg.size() - 7);
}

TEST_CASE("tikz marks the covering vertices") {
    const Certificate c = construct_p2(5);
    const std::string tikz = render(c, RenderFormat::tikz);
    CHECK(count_of(tikz, "circle (5pt)") == 5);
    CHECK(count_of(tikz, "circle (1.5pt)") == 5);
    CHECK(count_of(tikz, "\\draw[line width=2pt,") == c.paths.size());
    CHECK(tikz.rfind("\\begin{tikzpicture}", 0) == 0);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
}
