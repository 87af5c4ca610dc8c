#include "rrb/sector_fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rrb/census.hpp"

namespace rrb {

namespace {

// Full-circle angular order from reference (1,0): half-plane class first,
// then cross sign. Distinct fan rays never share a direction (three collinear
// points are excluded upstream).
bool dir_ccw_less(const Direction& a, const Direction& b) {
    auto half = [](const Direction& d) {
        return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

// Gap index of direction d among sorted rays: the last ray not after d,
// wrapping to the final gap for directions before the first ray.
template <typename Rays, typename DirOf>
int locate_gap(const Rays& rays, const DirOf& dir_of, const Direction& d) {
    const int k = static_cast<int>(rays.size());
    if (k == 1) return 0;
    int lo = 0, hi = k;  // first ray strictly after d
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (dir_ccw_less(d, dir_of(rays[mid]))) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo == 0 ? k - 1 : lo - 1;
}

}  // namespace

ConvexRegion SectorFan::gap_region(int gap) const {
    if (rays.size() == 1) return ConvexRegion::plane();
    const Direction& from = rays[gap].dir;
    const Direction& to = rays[(gap + 1) % rays.size()].dir;
    return ConvexRegion::sector(apex, from, to);
}

ConvexRegion SectorFan::red_sector_region(const RedSector& rs) const {
    if (whole_plane_red || rays.size() == 1) return ConvexRegion::plane();
    const Direction& from = rays[rs.first_gap].dir;
    const Direction& to = rays[(rs.last_gap + 1) % rays.size()].dir;
    return ConvexRegion::sector(apex, from, to);
}

SectorFan build_sector_fan(const ColoredPointSet& set, int red_index) {
    const int n = set.n();
    if (n < 2) throw std::invalid_argument("build_sector_fan: need at least two reds");
    if (red_index < 0 || red_index >= n) {
        throw std::invalid_argument("build_sector_fan: bad red index");
    }

    SectorFan fan;
    fan.apex_index = red_index;
    fan.apex = set.point(red_index);
    fan.rays.reserve(n - 1);
    for (int r = 0; r < n; ++r) {
        if (r == red_index) continue;
        fan.rays.push_back({Direction::between(fan.apex, set.point(r)), r});
    }
    std::sort(fan.rays.begin(), fan.rays.end(),
              [](const SectorFan::Ray& a, const SectorFan::Ray& b) {
                  return dir_ccw_less(a.dir, b.dir);
              });

    const int gaps = fan.gap_count();
    fan.gap_blue_counts.assign(gaps, 0);
    auto ray_dir = [](const SectorFan::Ray& r) -> const Direction& { return r.dir; };
    for (int b = n; b < set.total(); ++b) {
        const Direction d = Direction::between(fan.apex, set.point(b));
        ++fan.gap_blue_counts[locate_gap(fan.rays, ray_dir, d)];
    }
    for (int g = 0; g < gaps; ++g) fan.p_of_r += fan.gap_is_blue(g) ? 1 : 0;

    if (fan.p_of_r == 0) {
        fan.whole_plane_red = true;
        return fan;
    }
    // Merge maximal cyclic runs of blue-free gaps. At least one blue gap
    // exists here, so every run has a well-defined start.
    for (int g = 0; g < gaps; ++g) {
        if (fan.gap_is_blue(g)) continue;
        if (!fan.gap_is_blue((g + gaps - 1) % gaps)) continue;  // run continues
        int last = g;
        while (!fan.gap_is_blue((last + 1) % gaps)) last = (last + 1) % gaps;
        fan.red_sectors.push_back({g, last});
    }
    return fan;
}

std::pair<int, int> p_min(const ColoredPointSet& set) {
    if (set.n() < 2) throw std::invalid_argument("p_min: need at least two reds");
    int best = -1, arg = -1;
    for (int r = 0; r < set.n(); ++r) {
        const SectorFan fan = build_sector_fan(set, r);
        if (best == -1 || fan.p_of_r < best) {
            best = fan.p_of_r;
            arg = r;
        }
    }
    return {best, arg};
}

int discrepancy(const ColoredPointSet& set, const ConvexRegion& region) {
    if (region.is_reflex()) {
        throw std::invalid_argument("discrepancy: reflex sector is not a convex region");
    }
    int reds = 0, blues = 0;
    for (int i = 0; i < set.total(); ++i) {
        if (!region.contains(set.point(i))) continue;
        (set.color(i) == Color::red ? reds : blues) += 1;
    }
    return reds - blues;
}

long long discrepancy_bound(const ColoredPointSet& set, const ConvexRegion& region) {
    if (region.is_reflex()) {
        throw std::invalid_argument("discrepancy_bound: reflex sector is not a convex region");
    }
    long long reds = 0, blues = 0;
    for (int i = 0; i < set.total(); ++i) {
        if (!region.contains(set.point(i))) continue;
        (set.color(i) == Color::red ? reds : blues) += 1;
    }
    const long long bound = blues * (reds - blues);
    return bound > 0 ? bound : 0;
}

EmptySectorStats empty_sector_count(const ColoredPointSet& set, const ConvexRegion& region,
                                    int blue_index) {
    if (region.is_reflex()) {
        throw std::invalid_argument("empty_sector_count: reflex sector is not convex");
    }
    const int combined = set.n() + blue_index;
    if (blue_index < 0 || combined >= set.total()) {
        throw std::invalid_argument("empty_sector_count: bad blue index");
    }
    const Point b = set.point(combined);
    if (!region.contains(b)) {
        throw std::invalid_argument("empty_sector_count: blue point not in region");
    }

    std::vector<Direction> rays;
    for (int r = 0; r < set.n(); ++r) {
        if (region.contains(set.point(r))) {
            rays.push_back(Direction::between(b, set.point(r)));
        }
    }
    if (rays.empty()) {
        throw std::invalid_argument("empty_sector_count: region holds no red point");
    }
    std::sort(rays.begin(), rays.end(), dir_ccw_less);

    const int k = static_cast<int>(rays.size());
    EmptySectorStats stats;
    stats.sector_count = k;
    std::vector<int> occupied(k, 0);
    auto identity = [](const Direction& d) -> const Direction& { return d; };
    for (int o = set.n(); o < set.total(); ++o) {
        if (o == combined || !region.contains(set.point(o))) continue;
        ++occupied[locate_gap(rays, identity, Direction::between(b, set.point(o)))];
    }

    // The unique sector wider than pi, if any (with one ray, the full turn).
    int reflex_gap = -1;
    if (k == 1) {
        reflex_gap = 0;
    } else {
        for (int g = 0; g < k; ++g) {
            if (cross(rays[g], rays[(g + 1) % k]) <= 0) {
                reflex_gap = g;
                break;
            }
        }
    }
    for (int g = 0; g < k; ++g) {
        if (occupied[g] > 0) continue;
        ++stats.empty_sectors;
        if (g != reflex_gap) ++stats.triangle_yielding;
    }
    return stats;
}

std::vector<std::array<int, 3>> sector_witness_triangles(const ColoredPointSet& set) {
    const int n = set.n();
    if (n < 2) throw std::invalid_argument("sector_witness_triangles: need two reds");
    if (set.m() < 1) throw std::invalid_argument("sector_witness_triangles: need a blue");

    std::set<std::array<int, 3>> out;
    auto ray_dir = [](const SectorFan::Ray& r) -> const Direction& { return r.dir; };
    for (int r = 0; r < n; ++r) {
        const SectorFan fan = build_sector_fan(set, r);
        const int gaps = fan.gap_count();
        std::vector<std::vector<int>> gap_blues(gaps);
        for (int b = n; b < set.total(); ++b) {
            const Direction d = Direction::between(fan.apex, set.point(b));
            gap_blues[locate_gap(fan.rays, ray_dir, d)].push_back(b);
        }
        for (int g = 0; g < gaps; ++g) {
            if (gap_blues[g].empty()) continue;
            const Direction& start = fan.rays[g].dir;
            const Direction& end = fan.rays[(g + 1) % gaps].dir;
            int best_blue = -1;
            bool best_side_start = true;
            Direction best_leg1{1, 0}, best_leg2{1, 0};  // angle key of the current best
            for (int b : gap_blues[g]) {
                const Direction db = Direction::between(fan.apex, set.point(b));
                // Smaller of ccw(start->db) and ccw(db->end); a tie keeps the
                // start side (the first bounding ray counterclockwise).
                const bool side_start =
                    angle_compare(start, db, db, end) != std::strong_ordering::greater;
                const Direction& leg1 = side_start ? start : db;
                const Direction& leg2 = side_start ? db : end;
                if (best_blue == -1 ||
                    angle_compare(leg1, leg2, best_leg1, best_leg2) ==
                        std::strong_ordering::less) {
                    best_blue = b;
                    best_side_start = side_start;
                    best_leg1 = leg1;
                    best_leg2 = leg2;
                }
            }
            const int nearest_red =
                best_side_start ? fan.rays[g].red_index : fan.rays[(g + 1) % gaps].red_index;
            std::array<int, 3> tri = {r, nearest_red, best_blue};
            std::sort(tri.begin(), tri.end());
            out.insert(tri);
        }
    }

    // The minimality argument makes each triangle empty; a failure here means
    // an implementation bug, not a bad input.
    for (const auto& tri : out) {
        for (int q = 0; q < set.total(); ++q) {
            if (q == tri[0] || q == tri[1] || q == tri[2]) continue;
            if (point_in_triangle_strict(set.point(q), set.point(tri[0]), set.point(tri[1]),
                                         set.point(tri[2]))) {
                throw std::logic_error("sector_witness_triangles: non-empty witness triangle");
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace rrb
