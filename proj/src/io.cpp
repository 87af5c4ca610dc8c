#include "rrb/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace rrb {

namespace {

std::string point_str(const Point& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

ColoredPointSet parse_point_text(const std::string& text) {
    std::vector<Point> reds, blues;
    std::vector<std::pair<Point, int>> with_lines;  // for degeneracy reporting
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x, y;
        std::string color;
        if (!(ls >> x)) {
            std::string probe;
            std::istringstream blank(line);
            if (blank >> probe) {
                throw PointFileError(line_no, "line " + std::to_string(line_no) +
                                                  ": expected `x y c`, got \"" + line + "\"");
            }
            continue;  // blank or comment-only line
        }
        if (!(ls >> y >> color) || (color != "r" && color != "b")) {
            throw PointFileError(line_no, "line " + std::to_string(line_no) +
                                              ": expected `x y c` with c in {r, b}");
        }
        std::string extra;
        if (ls >> extra) {
            throw PointFileError(line_no,
                                 "line " + std::to_string(line_no) + ": trailing tokens");
        }
        Point p;
        try {
            p = Point(x, y);
        } catch (const std::invalid_argument& e) {
            throw PointFileError(line_no, "line " + std::to_string(line_no) + ": " + e.what());
        }
        (color == "r" ? reds : blues).push_back(p);
        with_lines.emplace_back(p, line_no);
    }

    std::vector<Point> all = reds;
    all.insert(all.end(), blues.begin(), blues.end());
    if (auto deg = find_degeneracy(all)) {
        if (deg->kind == Degeneracy::Kind::duplicate) {
            throw PointFileError(0, "duplicate point " + point_str(all[deg->a]));
        }
        throw PointFileError(0, "points not in general position: collinear " +
                                    point_str(all[deg->a]) + ", " + point_str(all[deg->b]) +
                                    ", " + point_str(all[deg->c]));
    }
    const int n = static_cast<int>(reds.size());
    std::vector<Point> pts = std::move(reds);
    pts.insert(pts.end(), blues.begin(), blues.end());
    return ColoredPointSet::create_unchecked(std::move(pts), n);
}

ColoredPointSet read_point_file(const std::string& path) {
    return parse_point_text(read_text_file(path));
}

std::string point_file_text(const ColoredPointSet& set) {
    std::vector<Point> reds(set.reds().begin(), set.reds().end());
    std::vector<Point> blues(set.blues().begin(), set.blues().end());
    std::sort(reds.begin(), reds.end(), lex_less);
    std::sort(blues.begin(), blues.end(), lex_less);
    std::string out;
    for (const Point& p : reds) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + " r\n";
    }
    for (const Point& p : blues) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + " b\n";
    }
    return out;
}

void write_point_file(const ColoredPointSet& set, const std::string& path) {
    write_text_file(path, point_file_text(set));
}

std::string fingerprint(const ColoredPointSet& set) {
    const std::string text = point_file_text(set);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Json census_to_json(const Census& census) {
    Json j;
    j["rrr"] = census.count_rrr;
    j["rrb"] = census.count_rrb;
    j["rbb"] = census.count_rbb;
    j["bbb"] = census.count_bbb;
    j["total"] = census.total();
    j["has_triangle_list"] = census.triangles.has_value();
    return j;
}

namespace {

std::string wide_str(Wide v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string out;
    while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return neg ? "-" + out : out;
}

Json direction_to_json(const Direction& d) {
    return Json{{"dx", d.dx}, {"dy", d.dy}};
}

Json run_to_json(const GoodSectorRun& run) {
    Json steps = Json::array();
    for (const GoodSector& g : run.steps) {
        steps.push_back(Json{{"from", direction_to_json(g.from)},
                             {"to", direction_to_json(g.to)},
                             {"reds", g.reds},
                             {"blues", g.blues}});
    }
    Json j;
    j["axis"] = direction_to_json(run.axis);
    j["half"] = run.half == HalfChoice::ccw ? "ccw" : "cw";
    j["reds_in_half"] = run.reds_in_half;
    j["blues_in_half"] = run.blues_in_half;
    j["k"] = run.k();
    j["steps"] = steps;
    j["terminal"] = Json{{"from", direction_to_json(run.terminal.from)},
                         {"axis_ray_only", run.terminal.axis_ray_only},
                         {"reds", run.terminal.reds},
                         {"blues", run.terminal.blues}};
    return j;
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["p"] = cert.p;
    j["r0"] = cert.r0;
    j["branch"] = branch_name(cert.branch);
    j["lower_bound"] = cert.lower_bound.str();
    // Comparison token for the n^{3/2}/72 floor, kept in integers.
    j["count_floor"] = Json{{"check", "n^3 <= (72*rrb)^2"},
                            {"n_cubed", wide_str(Wide(cert.n) * cert.n * cert.n)}};
    if (cert.branch == Certificate::Branch::good_sector) {
        j["forward"] = run_to_json(*cert.forward);
        j["reflected"] = run_to_json(*cert.reflected);
        j["chosen_run"] = cert.chosen_run == 0 ? "forward" : "reflected";
    }
    return j;
}

Json instance_to_json(const ColoredPointSet& set) {
    Json j;
    j["n"] = set.n();
    j["m"] = set.m();
    j["fingerprint"] = fingerprint(set);
    return j;
}

Json make_report(const ColoredPointSet& set) {
    Json j;
    j["schema_version"] = "1";
    j["instance"] = instance_to_json(set);
    return j;
}

}  // namespace rrb
