#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace saw {

namespace {

struct Bounds {
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
};

Bounds walk_bounds(const Walk& w, int box_side) {
    Bounds b{w.start.x, w.start.x, w.start.y, w.start.y};
    Point p = w.start;
    for (Dir d : w.steps) {
        p = step(p, d);
        b.minx = std::min(b.minx, p.x);
        b.maxx = std::max(b.maxx, p.x);
        b.miny = std::min(b.miny, p.y);
        b.maxy = std::max(b.maxy, p.y);
    }
    if (box_side >= 0) {
        b.minx = std::min(b.minx, 0);
        b.miny = std::min(b.miny, 0);
        b.maxx = std::max(b.maxx, box_side);
        b.maxy = std::max(b.maxy, box_side);
    }
    return b;
}

}  // namespace

std::string render_svg(const std::vector<Walk>& walks,
                       const std::vector<std::vector<std::uint8_t>>& per_step_sizes,
                       const RenderOptions& opt) {
    if (walks.empty()) throw std::invalid_argument("render_svg: empty walk list");
    if (!per_step_sizes.empty()) {
        if (per_step_sizes.size() != walks.size())
            throw std::invalid_argument("render_svg: per_step_sizes size mismatch");
        for (std::size_t i = 0; i < walks.size(); ++i)
            if (per_step_sizes[i].size() != walks[i].size())
                throw std::invalid_argument(
                    "render_svg: per-step size list does not match walk length");
    }

    const int cell = opt.cell > 0 ? opt.cell : 24;
    const double stroke = opt.stroke > 0 ? opt.stroke : 2.0;
    const int n = static_cast<int>(walks.size());
    const int cols = opt.columns > 0 ? opt.columns
                                     : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const int rows = (n + cols - 1) / cols;

    // Uniform panel size, large enough for the widest walk.
    std::vector<Bounds> bounds;
    bounds.reserve(walks.size());
    int span_x = 1, span_y = 1;
    for (const Walk& w : walks) {
        Bounds b = walk_bounds(w, opt.box_side);
        span_x = std::max(span_x, b.maxx - b.minx);
        span_y = std::max(span_y, b.maxy - b.miny);
        bounds.push_back(b);
    }
    const int pad = cell;
    const int panel_w = span_x * cell + 2 * pad;
    const int panel_h = span_y * cell + 2 * pad;
    const int width = cols * panel_w;
    const int height = rows * panel_h;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int i = 0; i < n; ++i) {
        const Walk& w = walks[i];
        const Bounds& b = bounds[i];
        const int px0 = (i % cols) * panel_w;
        const int py0 = (i / cols) * panel_h;
        // North is up: flip the lattice y axis into SVG pixel space.
        auto sx = [&](int x) { return px0 + pad + (x - b.minx) * cell; };
        auto sy = [&](int y) { return py0 + pad + (b.maxy - y) * cell; };

        out << "<g>\n";
        if (opt.box_side >= 0) {
            out << "<rect x=\"" << sx(0) << "\" y=\"" << sy(opt.box_side) << "\" width=\""
                << opt.box_side * cell << "\" height=\"" << opt.box_side * cell
                << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        }

        std::vector<Point> pts = w.vertices();
        out << "<polyline fill=\"none\" stroke=\"#20609f\" stroke-width=\"" << stroke
            << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j) out << ' ';
            out << sx(pts[j].x) << ',' << sy(pts[j].y);
        }
        out << "\"/>\n";

        if (opt.highlight_forced && !per_step_sizes.empty()) {
            const auto& sizes = per_step_sizes[i];
            for (std::size_t j = 0; j < sizes.size() && j + 1 < pts.size(); ++j) {
                if (sizes[j] != 1) continue;
                out << "<line x1=\"" << sx(pts[j].x) << "\" y1=\"" << sy(pts[j].y)
                    << "\" x2=\"" << sx(pts[j + 1].x) << "\" y2=\"" << sy(pts[j + 1].y)
                    << "\" stroke=\"#c23b22\" stroke-width=\"" << stroke * 2.5
                    << "\" stroke-linecap=\"round\"/>\n";
            }
        }

        out << "<circle cx=\"" << sx(w.start.x) << "\" cy=\"" << sy(w.start.y)
            << "\" r=\"" << stroke * 1.6 << "\" fill=\"#2e8b57\"/>\n";
        Point e = w.end();
        out << "<circle cx=\"" << sx(e.x) << "\" cy=\"" << sy(e.y)
            << "\" r=\"" << stroke * 1.6 << "\" fill=\"#c23b22\"/>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace saw
