#include "rrb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace rrb {

namespace {

constexpr const char* kRed = "#d03030";
constexpr const char* kBlue = "#3040d0";

struct Frame {
    double min_x, min_y, max_x, max_y;  // world box
    double scale, width, height;

    double x(double wx) const { return (wx - min_x) * scale + 20.0; }
    double y(double wy) const { return height - ((wy - min_y) * scale + 20.0); }
    double diag() const {
        return std::hypot(max_x - min_x, max_y - min_y) + 1.0;
    }
};

Frame frame_of(const ColoredPointSet& set) {
    Frame f{-1, -1, 1, 1, 1, 0, 0};
    bool first = true;
    for (const Point& p : set.points()) {
        const double px = static_cast<double>(p.x), py = static_cast<double>(p.y);
        if (first) {
            f.min_x = f.max_x = px;
            f.min_y = f.max_y = py;
            first = false;
        } else {
            f.min_x = std::min(f.min_x, px);
            f.max_x = std::max(f.max_x, px);
            f.min_y = std::min(f.min_y, py);
            f.max_y = std::max(f.max_y, py);
        }
    }
    const double span = std::max({f.max_x - f.min_x, f.max_y - f.min_y, 1.0});
    f.scale = 560.0 / span;
    f.width = (f.max_x - f.min_x) * f.scale + 40.0;
    f.height = (f.max_y - f.min_y) * f.scale + 40.0;
    return f;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string svg_open(const Frame& f) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(f.width) + "\" height=\"" + num(f.height) + "\" viewBox=\"0 0 " + num(f.width) +
           " " + num(f.height) + "\">\n";
}

void add_points(std::string& out, const Frame& f, const ColoredPointSet& set) {
    for (int i = 0; i < set.total(); ++i) {
        const Point& p = set.point(i);
        out += "  <circle cx=\"" + num(f.x(static_cast<double>(p.x))) + "\" cy=\"" +
               num(f.y(static_cast<double>(p.y))) + "\" r=\"3\" fill=\"" +
               (set.color(i) == Color::red ? kRed : kBlue) + "\"/>\n";
    }
}

void add_ray(std::string& out, const Frame& f, const Point& apex, const Direction& d,
             const char* dash) {
    const double len = std::hypot(static_cast<double>(d.dx), static_cast<double>(d.dy));
    const double reach = 2.0 * f.diag() / len;
    const double ax = static_cast<double>(apex.x), ay = static_cast<double>(apex.y);
    out += "  <line x1=\"" + num(f.x(ax)) + "\" y1=\"" + num(f.y(ay)) + "\" x2=\"" +
           num(f.x(ax + d.dx * reach)) + "\" y2=\"" + num(f.y(ay + d.dy * reach)) +
           "\" stroke=\"#404040\" stroke-width=\"0.8\"" + dash + "/>\n";
}

// Wedge from `from` counterclockwise to `to`, sampled so reflex spans stay
// faithful.
void add_wedge(std::string& out, const Frame& f, const Point& apex, const Direction& from,
               const Direction& to, const char* color) {
    const double a0 = std::atan2(static_cast<double>(from.dy), static_cast<double>(from.dx));
    double a1 = std::atan2(static_cast<double>(to.dy), static_cast<double>(to.dx));
    while (a1 <= a0) a1 += 2.0 * 3.141592653589793;
    const double reach = 2.0 * f.diag();
    const double ax = static_cast<double>(apex.x), ay = static_cast<double>(apex.y);
    const int segments = std::max(1, static_cast<int>((a1 - a0) / 0.6) + 1);
    std::string pts = num(f.x(ax)) + "," + num(f.y(ay));
    for (int s = 0; s <= segments; ++s) {
        const double a = a0 + (a1 - a0) * s / segments;
        pts += " " + num(f.x(ax + reach * std::cos(a))) + "," +
               num(f.y(ay + reach * std::sin(a)));
    }
    out += "  <polygon points=\"" + pts + "\" fill=\"" + color +
           "\" fill-opacity=\"0.1\" stroke=\"none\"/>\n";
}

void add_label(std::string& out, const Frame& f, double wx, double wy,
               const std::string& text) {
    out += "  <text x=\"" + num(f.x(wx)) + "\" y=\"" + num(f.y(wy)) +
           "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"#202020\">" + text +
           "</text>\n";
}

// A point a bit along the bisector of the wedge, for label placement.
std::pair<double, double> wedge_anchor(const Point& apex, const Direction& from,
                                       const Direction& to, double dist) {
    const double a0 = std::atan2(static_cast<double>(from.dy), static_cast<double>(from.dx));
    double a1 = std::atan2(static_cast<double>(to.dy), static_cast<double>(to.dx));
    while (a1 <= a0) a1 += 2.0 * 3.141592653589793;
    const double mid = (a0 + a1) / 2.0;
    return {static_cast<double>(apex.x) + dist * std::cos(mid),
            static_cast<double>(apex.y) + dist * std::sin(mid)};
}

}  // namespace

std::string render_points_svg(const ColoredPointSet& set) {
    const Frame f = frame_of(set);
    std::string out = svg_open(f);
    add_points(out, f, set);
    out += "</svg>\n";
    return out;
}

std::string render_fan_svg(const ColoredPointSet& set, const SectorFan& fan) {
    const Frame f = frame_of(set);
    std::string out = svg_open(f);
    const int gaps = fan.gap_count();
    if (gaps >= 2) {
        for (int g = 0; g < gaps; ++g) {
            add_wedge(out, f, fan.apex, fan.rays[g].dir, fan.rays[(g + 1) % gaps].dir,
                      fan.gap_is_blue(g) ? kBlue : kRed);
        }
    }
    for (const auto& ray : fan.rays) add_ray(out, f, fan.apex, ray.dir, "");
    add_points(out, f, set);
    add_label(out, f, static_cast<double>(fan.apex.x), static_cast<double>(fan.apex.y) -
              10.0 / f.scale, "r0");
    out += "</svg>\n";
    return out;
}

std::string render_run_svg(const ColoredPointSet& set, const GoodSectorRun& run) {
    const Frame f = frame_of(set);
    std::string out = svg_open(f);
    const double label_dist = 0.25 * f.diag();
    for (int i = 0; i < run.k(); ++i) {
        const GoodSector& g = run.steps[static_cast<std::size_t>(i)];
        const Direction& from = run.half == HalfChoice::ccw ? g.from : g.to;
        const Direction& to = run.half == HalfChoice::ccw ? g.to : g.from;
        add_wedge(out, f, run.apex, from, to, i % 2 == 0 ? kBlue : kRed);
        const auto [lx, ly] = wedge_anchor(run.apex, from, to, label_dist);
        add_label(out, f, lx, ly, "G" + std::to_string(i + 1));
        add_ray(out, f, run.apex, g.from, "");
        add_ray(out, f, run.apex, g.to, "");
    }
    if (!run.terminal.axis_ray_only) {
        const Direction neg = run.axis.reversed();
        const Direction& from = run.half == HalfChoice::ccw ? run.terminal.from : neg;
        const Direction& to = run.half == HalfChoice::ccw ? neg : run.terminal.from;
        add_wedge(out, f, run.apex, from, to, kRed);
        const auto [lx, ly] = wedge_anchor(run.apex, from, to, label_dist);
        add_label(out, f, lx, ly, "T");
        add_ray(out, f, run.apex, run.terminal.from, "");
    }
    add_ray(out, f, run.apex, run.axis, " stroke-dasharray=\"6 4\"");
    add_ray(out, f, run.apex, run.axis.reversed(), " stroke-dasharray=\"6 4\"");
    add_points(out, f, set);
    add_label(out, f, static_cast<double>(run.apex.x),
              static_cast<double>(run.apex.y) - 10.0 / f.scale, "r0");
    out += "</svg>\n";
    return out;
}

}  // namespace rrb
