#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "rrb/point_set.hpp"
#include "rrb/region.hpp"

namespace rrb {

enum class TriangleClass { rrr, rrb, rbb, bbb };

TriangleClass classify_triangle(const ColoredPointSet& set, const std::array<int, 3>& tri);
const char* triangle_class_name(TriangleClass c);

// Empty-triangle counts by color class. The triple list (combined indices,
// each triple and the list itself sorted) is optional: convex-position inputs
// have Theta(N^3) empty triangles, so lists default to sets of at most 200
// points.
struct Census {
    long long count_rrr = 0;
    long long count_rrb = 0;
    long long count_rbb = 0;
    long long count_bbb = 0;
    std::optional<std::vector<std::array<int, 3>>> triangles;

    long long total() const { return count_rrr + count_rrb + count_rbb + count_bbb; }
    long long by_class(TriangleClass c) const;

    friend bool operator==(const Census&, const Census&) = default;
};

enum class TriangleList { automatic, collect, counts_only };

// Ground truth: every vertex triple, tested against every other point.
// O(N^4); the contract every faster path is measured against.
Census census_oracle(const ColoredPointSet& set, TriangleList list = TriangleList::automatic);

// Same census via a per-apex counterclockwise sweep: each empty triangle is
// counted once at its lexicographically least vertex, found by a
// visibility-chain walk over the radially sorted remaining points.
Census census_fast(const ColoredPointSet& set, TriangleList list = TriangleList::automatic);

// One apex's contribution to the fast census: empty triangles whose
// lexicographically least vertex is pts[apex]. Span-based so that
// move-evaluation loops can call it on mutated buffers; indices < red_count
// are red.
Census census_apex(std::span<const Point> pts, int red_count, int apex,
                   TriangleList list = TriangleList::counts_only);

struct Witness {
    std::array<int, 3> triangle;  // combined indices, sorted
    TriangleClass cls;            // rrb or rbb
};

// The empty triangle spanned by a red-blue pair and the point closest to
// their line (ties by smallest combined index).
Witness witness_for_pair(const ColoredPointSet& set, int red_index, int blue_index);

// Number of k-subsets in convex position whose hull contains no other input
// point. Brute force; max_points caps the budget.
long long count_k_holes(std::span<const Point> points, int k, int max_points = 24);

// Empty rrb triangles whose three vertices lie in the closed region. The
// region is convex, so membership filtering of the global list is exact.
long long rrb_in_region(const ColoredPointSet& set, const ConvexRegion& region);
long long rrb_in_region(const ColoredPointSet& set, const ConvexRegion& region,
                        const Census& cached);

}  // namespace rrb
