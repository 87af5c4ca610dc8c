#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrb/point_set.hpp"
#include "rrb/rational.hpp"
#include "rrb/region.hpp"

namespace rrb {

// Which closed half of the axis line is scanned: ccw sweeps the half to the
// left of the axis direction (rotating counterclockwise from the positive
// axis), cw the half to its right (rotating clockwise). Both sweeps end at
// the negative axis.
enum class HalfChoice { ccw, cw };

inline HalfChoice opposite(HalfChoice h) {
    return h == HalfChoice::ccw ? HalfChoice::cw : HalfChoice::ccw;
}

struct BisectResult {
    Direction axis;
    HalfChoice half;          // closed half holding at least ceil(m/2) blues
    int reds_in_closed_half;  // = ceil((n+1)/2), both halves
    int blues_in_half;
};

// A line through red r0 splitting the reds evenly: both closed halves hold
// ceil((n+1)/2) reds (for even n the line passes through exactly one other
// red, placed on the positive axis; for odd n through none) and no blue lies
// on the line. Requires n >= 5; smaller sets belong to the min-sector branch.
BisectResult bisecting_line(const ColoredPointSet& set, int r0);

// One step of the rotating-ray scan: the sector from the first red hit
// (from) to the blue that first brought the window to blues >= reds/3 (to).
// Counts include r0.
struct GoodSector {
    Direction from;
    Direction to;
    int reds = 0;
    int blues = 0;
};

// Leftover sector from the last unmatched red hit to the negative axis; when
// no red remains after the last good sector it degenerates to the negative
// axis ray itself (reds = 1 counts just r0).
struct TerminalSector {
    Direction from{-1, 0};
    bool axis_ray_only = false;
    int reds = 1;
    int blues = 0;
};

struct GoodSectorRun {
    int r0 = -1;
    Point apex;
    Direction axis;
    HalfChoice half = HalfChoice::ccw;
    std::vector<GoodSector> steps;
    TerminalSector terminal;
    int reds_in_half = 0;   // closed half, includes r0 and any on-axis red
    int blues_in_half = 0;

    int k() const { return static_cast<int>(steps.size()); }
    long long sum_step_reds() const;
    ConvexRegion step_region(int i) const;
    ConvexRegion terminal_region() const;
};

// Rotating-ray scan of the closed half-plane: starting at the positive axis,
// repeatedly open a window at the first red hit and close it at the first
// blue making the window's blues >= reds/3 (a good sector); the leftovers
// past the last opened window form the terminal sector. The caller provides
// an axis/half pair with the bisecting-line properties (not revalidated, but
// blues on the axis line are rejected).
GoodSectorRun good_sector_run(const ColoredPointSet& set, int r0, const Direction& axis,
                              HalfChoice half);

// T and T' of a forward/reflected run pair share only the apex: in the
// forward frame T covers [theta_T, pi] and T' covers [0, theta_T'].
bool terminals_disjoint(const GoodSectorRun& forward, const GoodSectorRun& reflected);

struct Certificate {
    enum class Branch { min_sector, good_sector };

    int n = 0;
    int m = 0;
    int p = 0;
    int r0 = -1;
    Branch branch = Branch::min_sector;
    std::optional<GoodSectorRun> forward;
    std::optional<GoodSectorRun> reflected;
    int chosen_run = -1;  // 0 forward, 1 reflected
    Rat lower_bound;      // exact; certified against the census by the verifier

    const GoodSectorRun& chosen() const;
    // n^3 <= (72 * rrb)^2, pure integer arithmetic.
    bool count_floor_holds(long long rrb) const;
};

const char* branch_name(Certificate::Branch b);

// Lower-bound certificate for the number of empty red-red-blue triangles.
// Requires m >= n >= 2 (callers may swap colors explicitly when m < n).
// With p^2 > n or n < 5 the bound is p*n/2 from the minimum blue-sector
// count; otherwise both rotating-ray runs are performed and the bound is
// max(p*n/2, sum (2/9)|R(G_i)|^2) over the run whose terminal sector holds at
// most (|R(H)|+1)/2 reds. Violations of the run invariants are reported as
// logic errors: they would indicate an implementation bug.
Certificate assemble_certificate(const ColoredPointSet& set);

}  // namespace rrb
