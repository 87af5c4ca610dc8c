#pragma once

#include <array>
#include <utility>
#include <vector>

#include "rrb/point_set.hpp"
#include "rrb/region.hpp"

namespace rrb {

// Plane partition by rays from a red apex to every other red, with per-gap
// blue occupancy. Rays are sorted counterclockwise (reference direction
// (1,0)); gap g spans from rays[g] ccw to rays[(g+1) % rays.size()]. With a
// single ray the one cyclic gap is the whole plane.
struct SectorFan {
    int apex_index = -1;
    Point apex;

    struct Ray {
        Direction dir;
        int red_index;
    };
    std::vector<Ray> rays;
    std::vector<int> gap_blue_counts;  // one entry per gap, same indexing as rays
    int p_of_r = 0;                    // number of gaps holding at least one blue

    // Maximal cyclic runs of blue-free gaps, merged. Empty when p_of_r == 0,
    // in which case the merged region is the whole plane.
    struct RedSector {
        int first_gap;
        int last_gap;  // inclusive, cyclic
    };
    std::vector<RedSector> red_sectors;
    bool whole_plane_red = false;

    int gap_count() const { return static_cast<int>(rays.size()); }
    ConvexRegion gap_region(int gap) const;
    ConvexRegion red_sector_region(const RedSector& rs) const;
    bool gap_is_blue(int gap) const { return gap_blue_counts[gap] > 0; }
};

SectorFan build_sector_fan(const ColoredPointSet& set, int red_index);

// Minimum of p(r) over the reds and its argmin (smallest index on ties).
std::pair<int, int> p_min(const ColoredPointSet& set);

// |R(C)| - |B(C)| over a convex region (closed membership). Rejects reflex
// sectors: they are not convex.
int discrepancy(const ColoredPointSet& set, const ConvexRegion& region);

// max(0, |B(C)| * disc(C)) — a lower bound on the empty rrb triangles inside C.
long long discrepancy_bound(const ColoredPointSet& set, const ConvexRegion& region);

struct EmptySectorStats {
    int sector_count = 0;        // rays from b to every red of C partition C
    int empty_sectors = 0;       // sectors holding no other blue of C
    int triangle_yielding = 0;   // empty sectors minus the reflex one, if empty
};

// Sector statistics around a blue point inside a convex region.
EmptySectorStats empty_sector_count(const ColoredPointSet& set, const ConvexRegion& region,
                                    int blue_index);

// One empty rrb triangle per (red apex, blue gap): the blue minimizing the
// smaller angle to the gap's bounding rays, paired with the nearer ray's red.
// Deduplicated; at least ceil(p*n/2) triangles. Every triangle is re-verified
// empty before being returned.
std::vector<std::array<int, 3>> sector_witness_triangles(const ColoredPointSet& set);

}  // namespace rrb
