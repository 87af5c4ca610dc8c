#include "doctest.h"

#include <algorithm>
#include <vector>

#include "rrb/census.hpp"
#include "rrb/generators.hpp"

using namespace rrb;

TEST_CASE("gen_random_gp basics") {
    const auto empty = gen_random_gp(0, 0, 10, 1);
    CHECK(empty.total() == 0);

    const auto reds = gen_random_gp(3, 0, 100, 7);
    CHECK(reds.n() == 3);
    CHECK(reds.m() == 0);
    CHECK(is_general_position(reds.points()));
}

TEST_CASE("gen_random_gp is deterministic per seed") {
    const auto a = gen_random_gp(20, 20, 1000000, 42);
    const auto b = gen_random_gp(20, 20, 1000000, 42);
    CHECK(a == b);
    CHECK(census_fast(a) == census_fast(b));
    const auto c = gen_random_gp(20, 20, 1000000, 43);
    CHECK(a.points()[0] != c.points()[0]);
}

TEST_CASE("gen_random_gp output is always in general position") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto set = gen_random_gp(1 + seed % 12, seed % 15, seed % 3 == 0 ? 40 : 100000, seed);
        CHECK(is_general_position(set.points()));
        CHECK(set.n() == static_cast<int>(1 + seed % 12));
    }
}

TEST_CASE("gen_random_gp rejects impossible boxes") {
    CHECK_THROWS_AS(gen_random_gp(10, 10, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_gp(-1, 0, 10, 1), std::invalid_argument);
    // Feasible cell count, but a 19-column grid holds at most 38 points with
    // no three collinear, so 80 must exhaust the rejection budget.
    CHECK_THROWS_AS(gen_random_gp(40, 40, 9, 1), std::runtime_error);
}

TEST_CASE("gen_circle_pair structure") {
    const auto set = gen_circle_pair(4, 1000000, 999, 1000);
    CHECK(set.n() == 4);
    CHECK(set.m() == 4);
    CHECK(is_general_position(set.points()));
}

TEST_CASE("gen_circle_pair ring invariants") {
    for (int n : {3, 8, 17, 40}) {
        const auto [num, den] = default_circle_shrink(n);
        const auto set = gen_circle_pair(n, 1000000, num, den);
        const Coord radius = 1000000;
        for (const Point& r : set.reds()) {
            const Wide lhs = (Wide(r.x) * r.x + Wide(r.y) * r.y) * den * den;
            const Wide edge = Wide(radius) * num + Wide(2) * den;
            CHECK(lhs > edge * edge);
        }
        for (const Point& b : set.blues()) {
            const Wide lhs = Wide(b.x) * b.x + Wide(b.y) * b.y;
            const Wide edge = radius - 2;
            CHECK(lhs < edge * edge);
        }
        // Reds in convex position: every consecutive triple turns left.
        const auto reds = set.reds();
        for (int j = 0; j < n; ++j) {
            CHECK(orient(reds[j], reds[(j + 1) % n], reds[(j + 2) % n]) == 1);
        }
    }
}

TEST_CASE("gen_circle_pair has no empty monochromatic red triangle") {
    for (int n : {3, 20}) {
        const auto [num, den] = default_circle_shrink(n);
        const auto set = gen_circle_pair(n, n == 3 ? 1000000 : 10000000, num, den);
        CHECK(census_oracle(set).count_rrr == 0);
    }
}

TEST_CASE("gen_circle_pair parameter validation") {
    CHECK_THROWS_AS(gen_circle_pair(2, 1000, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_circle_pair(5, 1000, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_circle_pair(5, 1000, 2, 2), std::invalid_argument);
    // Tiny radius forces doubling retries but still succeeds.
    const auto set = gen_circle_pair(3, 8, 1, 2);
    CHECK(set.total() == 6);
}

TEST_CASE("gen_horton base cases") {
    CHECK(gen_horton(0) == std::vector<Point>{{0, 0}});
    const auto h2 = gen_horton(1);
    CHECK(h2.size() == 2);
    const auto h4 = gen_horton(2);
    CHECK(h4.size() == 4);
}

TEST_CASE("gen_horton x coordinates are 0..2^k-1 in order") {
    for (int k : {1, 3, 5, 7}) {
        const auto pts = gen_horton(k);
        REQUIRE(static_cast<int>(pts.size()) == 1 << k);
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            CHECK(pts[i].x == i);
        }
    }
}

namespace {

// Exact recursive check of the construction's separation property: split by x
// parity at every level; every line through two lower points must pass
// strictly below every upper point and vice versa.
bool separation_holds(const std::vector<Point>& pts) {
    if (pts.size() <= 2) return true;
    std::vector<Point> lower, upper;
    for (const Point& p : pts) {
        ((p.x % 2 + 2) % 2 == 0 ? lower : upper).push_back(p);
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        for (std::size_t j = i + 1; j < lower.size(); ++j) {
            for (const Point& u : upper) {
                if (orient(lower[i], lower[j], u) * (lower[j].x > lower[i].x ? 1 : -1) != 1) {
                    return false;  // u not strictly above the line
                }
            }
        }
    }
    for (std::size_t i = 0; i < upper.size(); ++i) {
        for (std::size_t j = i + 1; j < upper.size(); ++j) {
            for (const Point& l : lower) {
                if (orient(upper[i], upper[j], l) * (upper[j].x > upper[i].x ? 1 : -1) != -1) {
                    return false;  // l not strictly below the line
                }
            }
        }
    }
    auto shrink = [](std::vector<Point> v) {
        for (Point& p : v) p = Point(p.x / 2, p.y);
        return v;
    };
    std::vector<Point> up_shrunk = shrink(upper);
    // Normalize the upper copy's y so the recursion sees the raw pattern.
    Coord min_y = up_shrunk.front().y;
    for (const Point& p : up_shrunk) min_y = std::min(min_y, p.y);
    for (Point& p : up_shrunk) p = Point(p.x, p.y - min_y);
    return separation_holds(shrink(lower)) && separation_holds(up_shrunk);
}

}  // namespace

TEST_CASE("gen_horton separation and general position") {
    for (int k : {2, 3, 4, 5, 6}) {
        const auto pts = gen_horton(k);
        CHECK(separation_holds(pts));
        CHECK(is_general_position(pts));
    }
}

TEST_CASE("gen_horton overflows the coordinate bound eventually") {
    // The shift grows superexponentially; at some k <= 12 the y range must
    // leave [-2^30, 2^30] and the generator reports the offending k.
    bool threw = false;
    for (int k = 8; k <= 12 && !threw; ++k) {
        try {
            (void)gen_horton(k);
        } catch (const std::runtime_error& e) {
            threw = true;
            CHECK(std::string(e.what()).find(std::to_string(k)) != std::string::npos);
        }
    }
    CHECK(threw);
    CHECK_THROWS_AS(gen_horton(13), std::invalid_argument);
    CHECK_THROWS_AS(gen_horton(-1), std::invalid_argument);
}

TEST_CASE("bicolor alternating") {
    const auto pts = gen_horton(2);
    const auto set = bicolor(pts, ColoringScheme::alternating());
    CHECK(set.n() == 2);
    CHECK(set.m() == 2);
    const auto h16 = bicolor(gen_horton(4), ColoringScheme::alternating());
    CHECK(h16.n() == 8);
    CHECK(h16.m() == 8);
    CHECK(is_general_position(h16.points()));
}

TEST_CASE("bicolor alternating rejects odd counts") {
    const std::vector<Point> pts = {{0, 0}, {1, 3}, {5, 1}};
    CHECK_THROWS_AS(bicolor(pts, ColoringScheme::alternating()), std::invalid_argument);
}

TEST_CASE("bicolor random is deterministic and balanced") {
    const auto pts = gen_horton(4);
    const auto a = bicolor(pts, ColoringScheme::random(3));
    const auto b = bicolor(pts, ColoringScheme::random(3));
    CHECK(a == b);
    CHECK(a.n() == 8);
    const auto c = bicolor(pts, ColoringScheme::random(4));
    CHECK(c.n() == 8);
    CHECK_FALSE(a == c);
}

TEST_CASE("bicolor by x parity splits Horton layers") {
    const auto pts = gen_horton(3);
    const auto set = bicolor(pts, ColoringScheme::x_parity());
    CHECK(set.n() == 4);
    CHECK(set.m() == 4);
    for (const Point& p : set.reds()) CHECK(p.x % 2 == 0);
}

TEST_CASE("coloring scheme parsing round-trips") {
    CHECK(ColoringScheme::parse("alternating").kind ==
          ColoringScheme::Kind::alternating_by_index);
    CHECK(ColoringScheme::parse("x-parity").kind == ColoringScheme::Kind::by_x_parity);
    const auto r = ColoringScheme::parse("random(17)");
    CHECK(r.kind == ColoringScheme::Kind::random);
    CHECK(r.seed == 17);
    CHECK_THROWS_AS(ColoringScheme::parse("striped"), std::invalid_argument);
}
