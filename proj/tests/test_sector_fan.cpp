#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rrb/census.hpp"
#include "rrb/generators.hpp"
#include "rrb/sector_fan.hpp"

using namespace rrb;

namespace {

ColoredPointSet fan_example(bool with_blue) {
    std::vector<Point> reds = {{0, 0}, {10, 1}, {1, 10}, {-10, 1}, {-2, -11}};
    std::vector<Point> blues;
    if (with_blue) blues.push_back({5, 5});
    return ColoredPointSet::create(reds, blues);
}

}  // namespace

TEST_CASE("sector fan of the four-ray example") {
    const auto set = fan_example(true);
    const SectorFan fan = build_sector_fan(set, 0);
    CHECK(fan.gap_count() == 4);
    CHECK(fan.p_of_r == 1);
    CHECK(fan.red_sectors.size() == 1);  // three blue-free gaps merge into one run

    const SectorFan no_blue = build_sector_fan(fan_example(false), 0);
    CHECK(no_blue.p_of_r == 0);
    CHECK(no_blue.whole_plane_red);
    CHECK(no_blue.red_sectors.empty());
}

TEST_CASE("fan gaps partition the blues") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto set = gen_random_gp(8, 8, 100000, seed);
        for (int r = 0; r < set.n(); ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            CHECK(fan.gap_count() == set.n() - 1);
            long long sum = 0;
            for (int c : fan.gap_blue_counts) sum += c;
            CHECK(sum == set.m());
        }
    }
}

TEST_CASE("gap assignment agrees with region membership") {
    // Independent path: closed-sector membership instead of the binary search.
    for (std::uint64_t seed = 20; seed < 24; ++seed) {
        const auto set = gen_random_gp(6, 10, 5000, seed);
        for (int r = 0; r < set.n(); ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            std::vector<int> recount(fan.gap_count(), 0);
            for (int b = set.n(); b < set.total(); ++b) {
                int hits = 0, gap = -1;
                for (int g = 0; g < fan.gap_count(); ++g) {
                    if (fan.gap_region(g).contains(set.point(b))) {
                        ++hits;
                        gap = g;
                    }
                }
                CHECK(hits == 1);  // interior of exactly one gap (never on a ray)
                if (gap >= 0) ++recount[gap];
            }
            CHECK(recount == fan.gap_blue_counts);
        }
    }
}

TEST_CASE("red sectors are the maximal blue-free runs") {
    for (std::uint64_t seed = 30; seed < 36; ++seed) {
        const auto set = gen_random_gp(7, 5, 2000, seed);
        for (int r = 0; r < set.n(); ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            if (fan.p_of_r == 0) {
                CHECK(fan.whole_plane_red);
                continue;
            }
            CHECK(static_cast<int>(fan.red_sectors.size()) <= fan.p_of_r);
            int adjacent_blue_pairs = 0;
            const int gaps = fan.gap_count();
            for (int g = 0; g < gaps; ++g) {
                if (gaps > 1 && fan.gap_is_blue(g) && fan.gap_is_blue((g + 1) % gaps)) {
                    ++adjacent_blue_pairs;
                }
            }
            CHECK(static_cast<int>(fan.red_sectors.size()) ==
                  fan.p_of_r - adjacent_blue_pairs - (gaps == 1 ? 1 : 0));
            // Every merged run is blue-free.
            for (const auto& rs : fan.red_sectors) {
                int g = rs.first_gap;
                while (true) {
                    CHECK_FALSE(fan.gap_is_blue(g));
                    if (g == rs.last_gap) break;
                    g = (g + 1) % gaps;
                }
            }
        }
    }
}

TEST_CASE("p_min basics") {
    const auto no_blue = fan_example(false);
    CHECK(p_min(no_blue) == std::pair<int, int>{0, 0});

    const auto one_blue = fan_example(true);
    CHECK(p_min(one_blue).first == 1);  // a single blue gives p(r) = 1 for every red

    const auto two = ColoredPointSet::create({{0, 0}}, {});
    CHECK_THROWS_AS(p_min(two), std::invalid_argument);
}

TEST_CASE("p_min equals an independent per-red recount") {
    for (std::uint64_t seed = 50; seed < 54; ++seed) {
        const auto set = gen_random_gp(12, 12, 100000, seed);
        const auto [p, r0] = p_min(set);
        int best = 1 << 30;
        for (int r = 0; r < set.n(); ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            std::set<int> occupied;
            for (int b = set.n(); b < set.total(); ++b) {
                for (int g = 0; g < fan.gap_count(); ++g) {
                    if (fan.gap_region(g).contains(set.point(b))) {
                        occupied.insert(g);
                        break;
                    }
                }
            }
            best = std::min(best, static_cast<int>(occupied.size()));
        }
        CHECK(p == best);
        CHECK(build_sector_fan(set, r0).p_of_r == p);
    }
}

TEST_CASE("discrepancy basics") {
    const auto set = ColoredPointSet::create({{0, 0}, {5, 1}, {1, 7}}, {{3, 3}});
    CHECK(discrepancy(set, ConvexRegion::plane()) == 2);
    CHECK(discrepancy(set, ConvexRegion::half_plane({100, 0}, {1, 0})) == 0);

    const auto square = ColoredPointSet::create({{0, 0}, {10, 10}}, {{10, 0}, {0, 10}});
    CHECK(discrepancy(square, ConvexRegion::half_plane({0, 5}, {0, 1})) == 0);

    const auto reflex = ConvexRegion::sector({0, 0}, {1, 0}, {0, -1});
    CHECK(reflex.is_reflex());
    CHECK_THROWS_AS(discrepancy(set, reflex), std::invalid_argument);
    CHECK_THROWS_AS(discrepancy_bound(set, reflex), std::invalid_argument);
    CHECK_THROWS_AS(rrb_in_region(set, reflex), std::invalid_argument);
}

TEST_CASE("discrepancy bound trivial cases") {
    const auto set = ColoredPointSet::create({{0, 0}, {5, 1}, {1, 7}}, {{3, 3}});
    CHECK(discrepancy_bound(set, ConvexRegion::half_plane({4, 0}, {1, 0})) == 0);
    const auto blue_heavy = ColoredPointSet::create({{0, 0}}, {{5, 1}, {1, 7}, {3, 3}});
    CHECK(discrepancy_bound(blue_heavy, ConvexRegion::plane()) == 0);
}

TEST_CASE("discrepancy bound on a blue inside a red pentagon") {
    const auto set = ColoredPointSet::create({{10, 0}, {3, 9}, {-8, 6}, {-8, -6}, {3, -9}},
                                             {{0, 1}});
    CHECK(discrepancy_bound(set, ConvexRegion::plane()) == 4);
    CHECK(census_oracle(set).count_rrb >= 4);
}

TEST_CASE("discrepancy bound is honored by the census in every region") {
    for (std::uint64_t seed = 60; seed < 66; ++seed) {
        const auto set = gen_random_gp(6, 8, 3000, seed);
        const Census cached = census_oracle(set, TriangleList::collect);
        std::vector<ConvexRegion> regions = {ConvexRegion::plane(),
                                             ConvexRegion::half_plane({0, 0}, {0, 1}),
                                             ConvexRegion::half_plane({10, -5}, {1, 2})};
        for (int r = 0; r < set.n(); ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            for (int g = 0; g < fan.gap_count(); ++g) {
                const ConvexRegion region = fan.gap_region(g);
                if (!region.is_reflex()) regions.push_back(region);
            }
        }
        for (const ConvexRegion& region : regions) {
            CHECK(rrb_in_region(set, region, cached) >= discrepancy_bound(set, region));
        }
    }
}

TEST_CASE("empty sectors around a centered blue") {
    const auto set = ColoredPointSet::create({{10, 0}, {0, 10}, {-10, 0}, {0, -10}}, {{1, 2}});
    const auto stats = empty_sector_count(set, ConvexRegion::plane(), 0);
    CHECK(stats.sector_count == 4);
    CHECK(stats.empty_sectors == 4);
    CHECK(stats.triangle_yielding == 4);  // no sector spans more than pi here
}

TEST_CASE("empty sectors with a single red") {
    const auto set = ColoredPointSet::create({{10, 0}}, {{0, 0}, {50, 50}});
    const auto stats = empty_sector_count(set, ConvexRegion::plane(), 0);
    CHECK(stats.sector_count == 1);
    CHECK(stats.empty_sectors == 0);  // the other blue occupies the full turn

    const auto lone = ColoredPointSet::create({{10, 0}}, {{0, 0}});
    const auto lone_stats = empty_sector_count(lone, ConvexRegion::plane(), 0);
    CHECK(lone_stats.sector_count == 1);
    CHECK(lone_stats.empty_sectors == 1);
    CHECK(lone_stats.triangle_yielding == 0);  // full-turn sector is the reflex one
}

TEST_CASE("empty sector floor |R|-(|B|-1) holds whenever positive") {
    for (std::uint64_t seed = 70; seed < 76; ++seed) {
        const auto set = gen_random_gp(9, 4 + seed % 8, 4000, seed);
        const ConvexRegion region = ConvexRegion::plane();
        for (int b = 0; b < set.m(); ++b) {
            const auto stats = empty_sector_count(set, region, b);
            const int floor = set.n() - (set.m() - 1);
            if (floor > 0) CHECK(stats.empty_sectors >= floor);
            CHECK(stats.empty_sectors >= stats.triangle_yielding);
            CHECK(stats.triangle_yielding >= stats.empty_sectors - 1);
        }
    }
}

TEST_CASE("empty_sector_count input validation") {
    const auto set = ColoredPointSet::create({{10, 0}}, {{0, 0}});
    CHECK_THROWS_AS(empty_sector_count(set, ConvexRegion::plane(), 3), std::invalid_argument);
    CHECK_THROWS_AS(
        empty_sector_count(set, ConvexRegion::half_plane({5, 0}, {1, 0}), 0),
        std::invalid_argument);  // blue outside region
    const auto reflex = ConvexRegion::sector({0, 0}, {1, 0}, {0, -1});
    CHECK_THROWS_AS(empty_sector_count(set, reflex, 0), std::invalid_argument);
}

TEST_CASE("witnesses for two reds and one blue") {
    const auto set = ColoredPointSet::create({{0, 0}, {7, 3}}, {{2, 5}});
    const auto tris = sector_witness_triangles(set);
    REQUIRE(tris.size() == 1);
    CHECK(tris[0] == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("witness in the four-ray fan example") {
    const auto set = fan_example(true);
    const auto tris = sector_witness_triangles(set);
    // The blue (5,5) sits between the rays to (10,1) and (1,10); its witness
    // with apex (0,0) uses whichever bounding red is angularly nearer.
    bool found = false;
    for (const auto& tri : tris) {
        if (tri[0] == 0 && tri[2] == 5 && (tri[1] == 1 || tri[1] == 2)) found = true;
    }
    CHECK(found);
}

TEST_CASE("witness count and emptiness on random instances") {
    for (std::uint64_t seed = 80; seed < 86; ++seed) {
        const auto set = gen_random_gp(10, 12, 100000, seed);
        const auto [p, r0] = p_min(set);
        const auto tris = sector_witness_triangles(set);
        CHECK(2 * static_cast<long long>(tris.size()) >= static_cast<long long>(p) * set.n());
        const Census oracle = census_oracle(set, TriangleList::collect);
        for (const auto& tri : tris) {
            CHECK(classify_triangle(set, tri) == TriangleClass::rrb);
            CHECK(std::binary_search(oracle.triangles->begin(), oracle.triangles->end(), tri));
        }
    }
}
