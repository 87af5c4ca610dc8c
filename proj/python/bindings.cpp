#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "rrb/census.hpp"
#include "rrb/certificate.hpp"
#include "rrb/generators.hpp"
#include "rrb/io.hpp"
#include "rrb/search.hpp"
#include "rrb/sector_fan.hpp"
#include "rrb/svg.hpp"
#include "rrb/verify.hpp"

namespace py = pybind11;

namespace {

using XY = std::pair<long long, long long>;

std::vector<rrb::Point> to_points(const std::vector<XY>& xs) {
    std::vector<rrb::Point> pts;
    pts.reserve(xs.size());
    for (const auto& [x, y] : xs) pts.emplace_back(x, y);
    return pts;
}

std::vector<XY> from_points(std::span<const rrb::Point> pts) {
    std::vector<XY> xs;
    xs.reserve(pts.size());
    for (const rrb::Point& p : pts) xs.emplace_back(p.x, p.y);
    return xs;
}

// Reports cross the boundary as parsed JSON: no bespoke mirror classes.
py::object json_to_py(const rrb::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict census_to_py(const rrb::Census& c) {
    py::dict d;
    d["rrr"] = c.count_rrr;
    d["rrb"] = c.count_rrb;
    d["rbb"] = c.count_rbb;
    d["bbb"] = c.count_bbb;
    d["total"] = c.total();
    if (c.triangles) {
        py::list tris;
        for (const auto& t : *c.triangles) tris.append(py::make_tuple(t[0], t[1], t[2]));
        d["triangles"] = tris;
    }
    return d;
}

rrb::TriangleList list_mode(bool with_triangles) {
    return with_triangles ? rrb::TriangleList::collect : rrb::TriangleList::counts_only;
}

}  // namespace

PYBIND11_MODULE(_rrb, m) {
    m.doc() = "exact census and certified lower bounds for empty two-colored triangles";

    py::class_<rrb::ColoredPointSet>(m, "PointSet")
        .def(py::init([](const std::vector<XY>& reds, const std::vector<XY>& blues) {
                 return rrb::ColoredPointSet::create(to_points(reds), to_points(blues));
             }),
             py::arg("reds"), py::arg("blues"),
             "Red/blue planar points with integer coordinates; validates general position.")
        .def_property_readonly("n", &rrb::ColoredPointSet::n)
        .def_property_readonly("m", &rrb::ColoredPointSet::m)
        .def_property_readonly("total", &rrb::ColoredPointSet::total)
        .def("reds", [](const rrb::ColoredPointSet& s) { return from_points(s.reds()); })
        .def("blues", [](const rrb::ColoredPointSet& s) { return from_points(s.blues()); })
        .def("swapped_colors", &rrb::ColoredPointSet::swapped_colors)
        .def("fingerprint", [](const rrb::ColoredPointSet& s) { return rrb::fingerprint(s); })
        .def("to_text", [](const rrb::ColoredPointSet& s) { return rrb::point_file_text(s); })
        .def("save", [](const rrb::ColoredPointSet& s, const std::string& path) {
            rrb::write_point_file(s, path);
        })
        .def_static("parse", [](const std::string& text) { return rrb::parse_point_text(text); })
        .def_static("load", [](const std::string& path) { return rrb::read_point_file(path); })
        .def("__eq__", [](const rrb::ColoredPointSet& a,
                          const rrb::ColoredPointSet& b) { return a == b; })
        .def("__repr__", [](const rrb::ColoredPointSet& s) {
            return "PointSet(n=" + std::to_string(s.n()) + ", m=" + std::to_string(s.m()) + ")";
        });

    m.def(
        "census_fast",
        [](const rrb::ColoredPointSet& s, bool with_triangles) {
            return census_to_py(rrb::census_fast(s, list_mode(with_triangles)));
        },
        py::arg("set"), py::arg("with_triangles") = false,
        "Empty-triangle counts by color class via the radial sweep.");
    m.def(
        "census_oracle",
        [](const rrb::ColoredPointSet& s, bool with_triangles) {
            return census_to_py(rrb::census_oracle(s, list_mode(with_triangles)));
        },
        py::arg("set"), py::arg("with_triangles") = false,
        "Ground-truth counts by exhaustive enumeration (O(N^4)).");
    m.def(
        "witness_for_pair",
        [](const rrb::ColoredPointSet& s, int r, int b) {
            const rrb::Witness w = rrb::witness_for_pair(s, r, b);
            return py::make_tuple(py::make_tuple(w.triangle[0], w.triangle[1], w.triangle[2]),
                                  rrb::triangle_class_name(w.cls));
        },
        py::arg("set"), py::arg("red_index"), py::arg("blue_index"));
    m.def(
        "count_k_holes",
        [](const std::vector<XY>& pts, int k, int max_points) {
            return rrb::count_k_holes(to_points(pts), k, max_points);
        },
        py::arg("points"), py::arg("k"), py::arg("max_points") = 24);

    m.def("gen_random_gp",
          [](int n, int m, long long box, std::uint64_t seed) {
              return rrb::gen_random_gp(n, m, box, seed);
          },
          py::arg("n"), py::arg("m"), py::arg("box") = 1000000, py::arg("seed") = 1);
    m.def(
        "gen_circle_pair",
        [](int n, long long radius, long long shrink_num, long long shrink_den) {
            if (shrink_num == 0 || shrink_den == 0) {
                std::tie(shrink_num, shrink_den) = rrb::default_circle_shrink(n);
            }
            return rrb::gen_circle_pair(n, radius, shrink_num, shrink_den);
        },
        py::arg("n"), py::arg("radius") = 1000000, py::arg("shrink_num") = 0,
        py::arg("shrink_den") = 0);
    m.def("gen_horton",
          [](int k) { return from_points(rrb::gen_horton(k)); }, py::arg("size_log2"));
    m.def(
        "bicolor",
        [](const std::vector<XY>& pts, const std::string& scheme) {
            return rrb::bicolor(to_points(pts), rrb::ColoringScheme::parse(scheme));
        },
        py::arg("points"), py::arg("scheme") = "alternating");

    m.def("p_min", [](const rrb::ColoredPointSet& s) { return rrb::p_min(s); }, py::arg("set"),
          "Minimum blue-sector count over the reds and its argmin index.");
    m.def(
        "sector_witness_triangles",
        [](const rrb::ColoredPointSet& s) {
            py::list out;
            for (const auto& t : rrb::sector_witness_triangles(s)) {
                out.append(py::make_tuple(t[0], t[1], t[2]));
            }
            return out;
        },
        py::arg("set"));

    m.def(
        "certificate",
        [](const rrb::ColoredPointSet& s) {
            return json_to_py(rrb::certificate_to_json(rrb::assemble_certificate(s)));
        },
        py::arg("set"),
        "Exact lower-bound certificate for the empty rrb count (requires m >= n >= 2).");
    m.def(
        "verify",
        [](const rrb::ColoredPointSet& s, const std::string& depth) {
            const auto report = rrb::verify_all(
                s, depth == "full" ? rrb::VerifyDepth::full : rrb::VerifyDepth::quick);
            return json_to_py(rrb::verification_report_to_json(report));
        },
        py::arg("set"), py::arg("depth") = "quick");
    m.def("ceiling_fact_scan", &rrb::ceiling_fact_scan, py::arg("limit"));

    m.def(
        "minimize_rrb",
        [](int n, int m, long long box, long long iterations, std::uint64_t seed, int restarts) {
            rrb::AnnealParams params;
            params.iterations = iterations;
            params.seed = seed;
            params.restarts = restarts;
            params.record_trace = false;
            const rrb::SearchResult res = rrb::minimize_rrb(n, m, box, params);
            py::dict d;
            d["best"] = res.best;
            d["best_count"] = res.best_count;
            d["proposals"] = res.proposals;
            d["accepted"] = res.accepted;
            return d;
        },
        py::arg("n"), py::arg("m"), py::arg("box") = 1000, py::arg("iterations") = 10000,
        py::arg("seed") = 1, py::arg("restarts") = 1);
    m.def(
        "horton_scan",
        [](int k_min, int k_max, const std::vector<std::string>& scheme_names) {
            std::vector<rrb::ColoringScheme> schemes;
            for (const auto& s : scheme_names) schemes.push_back(rrb::ColoringScheme::parse(s));
            py::list out;
            for (const auto& row : rrb::horton_bicoloring_scan(k_min, k_max, schemes)) {
                py::dict d;
                d["k"] = row.size_log2;
                d["scheme"] = row.scheme;
                d["points"] = row.points;
                d["reds"] = row.reds;
                d["count_rrb"] = row.count_rrb;
                d["rrb_over_n_squared"] = row.ratio;
                out.append(d);
            }
            return out;
        },
        py::arg("k_min"), py::arg("k_max"),
        py::arg("schemes") = std::vector<std::string>{"alternating"});

    m.def("render_fan_svg", [](const rrb::ColoredPointSet& s, int apex) {
        return rrb::render_fan_svg(s, rrb::build_sector_fan(s, apex));
    });

    m.attr("__version__") = "0.1.0";
}
