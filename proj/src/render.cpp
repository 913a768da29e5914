#include "sge/render.hpp"

#include <set>
#include <string>

namespace sge {

namespace {

// Cycled per path so overlapping polylines stay distinguishable.
constexpr const char* kSvgPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                       "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
constexpr const char* kTikzPalette[] = {"red",    "blue", "green!60!black", "violet",
                                        "orange", "teal", "gray",           "black"};
constexpr int kPaletteSize = 8;

constexpr int kCell = 40;    // svg pixels per grid unit
constexpr int kMargin = 30;  // svg border

std::string render_svg(const Certificate& cert) {
    const int n = cert.grid.n, m = cert.grid.m;
    auto px = [&](Vertex v) { return kMargin + (v.x - 1) * kCell; };
    // Row 1 sits at the bottom of the figure.
    auto py = [&](Vertex v) { return kMargin + (m - v.y) * kCell; };
    const int width = 2 * kMargin + (n - 1) * kCell;
    const int height = 2 * kMargin + (m - 1) * kCell;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    out += "  <g stroke=\"#cccccc\" stroke-width=\"2\">\n";
    for (int y = 1; y <= m; ++y)
        if (n > 1)
            out += "    <line x1=\"" + std::to_string(px({1, y})) + "\" y1=\"" +
                   std::to_string(py({1, y})) + "\" x2=\"" + std::to_string(px({n, y})) +
                   "\" y2=\"" + std::to_string(py({n, y})) + "\"/>\n";
    for (int x = 1; x <= n; ++x)
        if (m > 1)
            out += "    <line x1=\"" + std::to_string(px({x, 1})) + "\" y1=\"" +
                   std::to_string(py({x, 1})) + "\" x2=\"" + std::to_string(px({x, m})) +
                   "\" y2=\"" + std::to_string(py({x, m})) + "\"/>\n";
    out += "  </g>\n";

    out += "  <g fill=\"none\" stroke-width=\"5\" stroke-linecap=\"round\" "
           "stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
        out += "    <polyline stroke=\"";
        out += kSvgPalette[i % kPaletteSize];
        out += "\" points=\"";
        bool first = true;
        for (Vertex v : cert.paths[i].path.vertices) {
            if (!first) out += " ";
            first = false;
            out += std::to_string(px(v)) + "," + std::to_string(py(v));
        }
        out += "\"/>\n";
    }
    out += "  </g>\n";

    const std::set<Vertex> in_s(cert.s.begin(), cert.s.end());
    out += "  <g>\n";
    for (int y = 1; y <= m; ++y)
        for (int x = 1; x <= n; ++x) {
            Vertex v{x, y};
            out += "    <circle cx=\"" + std::to_string(px(v)) + "\" cy=\"" +
                   std::to_string(py(v)) + "\"";
            if (in_s.count(v))
                out += " r=\"8\" fill=\"#000000\"";
            else
                out += " r=\"3\" fill=\"#999999\"";
            out += "/>\n";
        }
    out += "  </g>\n</svg>\n";
    return out;
}

std::string render_tikz(const Certificate& cert) {
    const int n = cert.grid.n, m = cert.grid.m;
    auto coord = [](Vertex v) {
        return "(" + std::to_string(v.x - 1) + "," + std::to_string(v.y - 1) + ")";
    };
    std::string out = "\\begin{tikzpicture}\n";
    for (int y = 1; y <= m; ++y)
        if (n > 1)
            out += "  \\draw[gray!50] " + coord({1, y}) + " -- " + coord({n, y}) + ";\n";
    for (int x = 1; x <= n; ++x)
        if (m > 1)
            out += "  \\draw[gray!50] " + coord({x, 1}) + " -- " + coord({x, m}) + ";\n";
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
        out += "  \\draw[line width=2pt,";
        out += kTikzPalette[i % kPaletteSize];
        out += "]";
        for (std::size_t j = 0; j < cert.paths[i].path.vertices.size(); ++j) {
            if (j > 0) out += " --";
            out += " " + coord(cert.paths[i].path.vertices[j]);
        }
        out += ";\n";
    }
    const std::set<Vertex> in_s(cert.s.begin(), cert.s.end());
    for (int y = 1; y <= m; ++y)
        for (int x = 1; x <= n; ++x) {
            Vertex v{x, y};
            if (in_s.count(v))
                out += "  \\fill " + coord(v) + " circle (5pt);\n";
            else
                out += "  \\fill[gray] " + coord(v) + " circle (1.5pt);\n";
        }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace

std::string render(const Certificate& cert, RenderFormat format) {
    return format == RenderFormat::svg ? render_svg(cert) : render_tikz(cert);
}

}  // namespace sge
