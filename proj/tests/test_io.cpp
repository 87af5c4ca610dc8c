#include "doctest.h"

#include <cstdio>

#include "rrb/census.hpp"
#include "rrb/certificate.hpp"
#include "rrb/generators.hpp"
#include "rrb/io.hpp"
#include "rrb/sector_fan.hpp"
#include "rrb/svg.hpp"
#include "test_util.hpp"

using namespace rrb;

TEST_CASE("point text round-trip") {
    const auto set = parse_point_text("0 0 r\n10 0 b\n");
    CHECK(set.n() == 1);
    CHECK(set.m() == 1);
    CHECK(set.point(0) == Point{0, 0});
    CHECK(set.point(1) == Point{10, 0});
    CHECK(point_file_text(set) == "0 0 r\n10 0 b\n");
}

TEST_CASE("comments and blank lines are ignored") {
    const auto set = parse_point_text("# header\n\n1 2 r # inline comment\n\n3 4 b\n");
    CHECK(set.n() == 1);
    CHECK(set.m() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_point_text("0 0 r\n1 1 oops\n");
        FAIL("expected PointFileError");
    } catch (const PointFileError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_point_text("1 2 r extra\n"), PointFileError);
    CHECK_THROWS_AS(parse_point_text("junk\n"), PointFileError);
    CHECK_THROWS_AS(parse_point_text("2000000000 0 r\n"), PointFileError);
}

TEST_CASE("general-position violations name the offending points") {
    try {
        parse_point_text("0 0 r\n1 1 r\n2 2 r\n");
        FAIL("expected PointFileError");
    } catch (const PointFileError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("(0, 0)") != std::string::npos);
        CHECK(msg.find("(1, 1)") != std::string::npos);
        CHECK(msg.find("(2, 2)") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_point_text("5 5 r\n5 5 b\n"), PointFileError);
}

TEST_CASE("canonical writing sorts reds first") {
    const auto set = parse_point_text("9 8 b\n5 5 r\n0 1 b\n2 1 r\n");
    CHECK(point_file_text(set) == "2 1 r\n5 5 r\n0 1 b\n9 8 b\n");
}

TEST_CASE("file round-trip through disk preserves the set") {
    const auto set = gen_random_gp(10, 10, 100000, 77);
    const std::string path = "io_roundtrip_test.pts";
    write_point_file(set, path);
    const auto back = read_point_file(path);
    std::remove(path.c_str());
    CHECK(back.n() == set.n());
    CHECK(back.m() == set.m());
    CHECK(point_file_text(back) == point_file_text(set));
    CHECK(census_fast(back, TriangleList::counts_only) ==
          census_fast(set, TriangleList::counts_only));
}

TEST_CASE("fingerprint is canonical and discriminating") {
    const auto a = parse_point_text("0 0 r\n5 5 r\n1 3 b\n");
    const auto b = parse_point_text("5 5 r\n1 3 b\n0 0 r\n");  // same set, shuffled
    const auto c = parse_point_text("0 0 r\n5 5 r\n1 4 b\n");
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(fingerprint(a) != fingerprint(c));
    CHECK(fingerprint(a).size() == 16);
}

TEST_CASE("census json carries the class counts") {
    const auto set = parse_point_text("0 0 r\n4 0 r\n1 3 b\n");
    const Json j = census_to_json(census_fast(set));
    CHECK(j["rrb"] == 1);
    CHECK(j["total"] == 1);
    const std::string text = j.dump();
    CHECK(Json::parse(text).dump() == text);
}

TEST_CASE("certificate json for both branches") {
    // Saturated fans: min-sector branch.
    const auto minset = ColoredPointSet::create(
        {{10, 10}, {-10, 10}, {-10, -10}, {10, -10}},
        {{40, 1}, {28, 29}, {-1, 40}, {-29, 28}, {-40, -1}, {-28, -29}, {1, -40}, {29, -28}});
    const Json jmin = certificate_to_json(assemble_certificate(minset));
    CHECK(jmin["branch"] == "min-sector");
    CHECK(jmin["lower_bound"] == "6/1");
    CHECK_FALSE(jmin.contains("forward"));

    // Clustered blues: good-sector branch with run tables.
    const auto goodset = testutil::clustered_blues(9, 11, 4);
    const Certificate cert = assemble_certificate(goodset);
    REQUIRE(cert.branch == Certificate::Branch::good_sector);
    const Json jgood = certificate_to_json(cert);
    CHECK(jgood["branch"] == "good-sector");
    CHECK(jgood["forward"]["k"].get<int>() == cert.forward->k());
    CHECK(jgood["reflected"]["steps"].is_array());
    const std::string text = jgood.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
}

TEST_CASE("report skeleton") {
    const auto set = parse_point_text("0 0 r\n4 0 r\n1 3 b\n");
    const Json j = make_report(set);
    CHECK(j["schema_version"] == "1");
    CHECK(j["instance"]["n"] == 2);
    CHECK(j["instance"]["m"] == 1);
    CHECK(j["instance"]["fingerprint"] == fingerprint(set));
}

TEST_CASE("svg output is deterministic and well formed") {
    const auto set = gen_random_gp(6, 6, 5000, 5);
    const SectorFan fan = build_sector_fan(set, 0);
    const std::string a = render_fan_svg(set, fan);
    const std::string b = render_fan_svg(set, fan);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    // one circle per point, one wedge per gap
    std::size_t circles = 0;
    for (std::size_t pos = a.find("<circle"); pos != std::string::npos;
         pos = a.find("<circle", pos + 1)) {
        ++circles;
    }
    CHECK(circles == static_cast<std::size_t>(set.total()));
    std::size_t wedges = 0;
    for (std::size_t pos = a.find("<polygon"); pos != std::string::npos;
         pos = a.find("<polygon", pos + 1)) {
        ++wedges;
    }
    CHECK(wedges == static_cast<std::size_t>(fan.gap_count()));
}

TEST_CASE("run svg labels the sectors") {
    const auto set = testutil::clustered_blues(9, 11, 4);
    const Certificate cert = assemble_certificate(set);
    REQUIRE(cert.branch == Certificate::Branch::good_sector);
    const std::string svg = render_run_svg(set, cert.chosen());
    CHECK(svg.find(">r0<") != std::string::npos);
    CHECK(svg.find(">G1<") != std::string::npos);
    CHECK(render_run_svg(set, cert.chosen()) == svg);
}
