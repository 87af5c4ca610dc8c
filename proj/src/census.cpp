#include "rrb/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rrb {

TriangleClass classify_triangle(const ColoredPointSet& set, const std::array<int, 3>& tri) {
    int reds = 0;
    for (int v : tri) reds += set.color(v) == Color::red ? 1 : 0;
    switch (reds) {
        case 3: return TriangleClass::rrr;
        case 2: return TriangleClass::rrb;
        case 1: return TriangleClass::rbb;
        default: return TriangleClass::bbb;
    }
}

const char* triangle_class_name(TriangleClass c) {
    switch (c) {
        case TriangleClass::rrr: return "rrr";
        case TriangleClass::rrb: return "rrb";
        case TriangleClass::rbb: return "rbb";
        case TriangleClass::bbb: return "bbb";
    }
    return "?";
}

long long Census::by_class(TriangleClass c) const {
    switch (c) {
        case TriangleClass::rrr: return count_rrr;
        case TriangleClass::rrb: return count_rrb;
        case TriangleClass::rbb: return count_rbb;
        case TriangleClass::bbb: return count_bbb;
    }
    return 0;
}

namespace {

bool want_list(TriangleList mode, int total) {
    switch (mode) {
        case TriangleList::collect: return true;
        case TriangleList::counts_only: return false;
        case TriangleList::automatic: return total <= 200;
    }
    return false;
}

TriangleClass classify_raw(int red_count, const std::array<int, 3>& tri) {
    int reds = 0;
    for (int v : tri) reds += v < red_count ? 1 : 0;
    switch (reds) {
        case 3: return TriangleClass::rrr;
        case 2: return TriangleClass::rrb;
        case 1: return TriangleClass::rbb;
        default: return TriangleClass::bbb;
    }
}

void tally(Census& census, int red_count, std::array<int, 3> tri, bool collect) {
    std::sort(tri.begin(), tri.end());
    switch (classify_raw(red_count, tri)) {
        case TriangleClass::rrr: ++census.count_rrr; break;
        case TriangleClass::rrb: ++census.count_rrb; break;
        case TriangleClass::rbb: ++census.count_rbb; break;
        case TriangleClass::bbb: ++census.count_bbb; break;
    }
    if (collect) census.triangles->push_back(tri);
}

void finish(Census& census) {
    if (census.triangles) std::sort(census.triangles->begin(), census.triangles->end());
}

struct RadialEntry {
    Direction dir;
    int index;  // combined index
};

// Visibility-chain walk around one apex; emits every (i, j) pair such that
// the triangle (apex, i, j) is empty. `around` is scratch space.
template <typename Emit>
void scan_apex(std::span<const Point> pts, int apex, std::vector<RadialEntry>& around,
               Emit&& emit) {
    const int total = static_cast<int>(pts.size());
    // Only lexicographically larger points can be vertices of a triangle
    // whose least vertex is the apex, and only they can block one.
    around.clear();
    for (int i = 0; i < total; ++i) {
        if (lex_less(pts[apex], pts[i])) {
            around.push_back({Direction::between(pts[apex], pts[i]), i});
        }
    }
    const int t = static_cast<int>(around.size());
    if (t < 2) return;
    // All directions lie in the half-open cone dx > 0 or (dx == 0, dy > 0),
    // so the pairwise cross sign is a total angular order.
    std::sort(around.begin(), around.end(), [](const RadialEntry& u, const RadialEntry& v) {
        return cross(u.dir, v.dir) > 0;
    });

    for (int j = 1; j < t; ++j) {
        const Point& pj = pts[around[j].index];
        int i = j - 1;
        while (true) {
            emit(around[i].index, around[j].index);
            // Next visible predecessor: the nearest k < i strictly left of
            // the directed line p_i -> p_j. Everything skipped on the way is
            // blocked by p_i.
            const Point& pi = pts[around[i].index];
            int k = i - 1;
            while (k >= 0 && orient(pi, pj, pts[around[k].index]) < 0) --k;
            if (k < 0) break;
            i = k;
        }
    }
}

}  // namespace

Census census_oracle(const ColoredPointSet& set, TriangleList list) {
    const int total = set.total();
    Census census;
    if (want_list(list, total)) census.triangles.emplace();
    const auto pts = set.points();
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            for (int k = j + 1; k < total; ++k) {
                bool empty = true;
                for (int q = 0; q < total && empty; ++q) {
                    if (q == i || q == j || q == k) continue;
                    if (point_in_triangle_strict(pts[q], pts[i], pts[j], pts[k])) empty = false;
                }
                if (empty) tally(census, set.n(), {i, j, k}, census.triangles.has_value());
            }
        }
    }
    finish(census);
    return census;
}

Census census_fast(const ColoredPointSet& set, TriangleList list) {
    const int total = set.total();
    Census census;
    if (want_list(list, total)) census.triangles.emplace();
    const bool collect = census.triangles.has_value();
    const auto pts = set.points();

    std::vector<RadialEntry> around;
    around.reserve(total);
    for (int a = 0; a < total; ++a) {
        scan_apex(pts, a, around, [&](int i, int j) {
            tally(census, set.n(), {a, i, j}, collect);
        });
    }
    finish(census);
    return census;
}

Census census_apex(std::span<const Point> pts, int red_count, int apex, TriangleList list) {
    Census census;
    if (want_list(list, static_cast<int>(pts.size()))) census.triangles.emplace();
    const bool collect = census.triangles.has_value();
    std::vector<RadialEntry> around;
    around.reserve(pts.size());
    scan_apex(pts, apex, around, [&](int i, int j) {
        tally(census, red_count, {apex, i, j}, collect);
    });
    finish(census);
    return census;
}

Witness witness_for_pair(const ColoredPointSet& set, int red_index, int blue_index) {
    const int n = set.n(), m = set.m();
    if (red_index < 0 || red_index >= n) throw std::invalid_argument("witness_for_pair: bad red index");
    if (blue_index < 0 || blue_index >= m) throw std::invalid_argument("witness_for_pair: bad blue index");
    if (n + m < 3) throw std::invalid_argument("witness_for_pair: need a third point");

    const int ri = red_index;
    const int bi = n + blue_index;
    const Point& r = set.point(ri);
    const Point& b = set.point(bi);
    const Direction base = Direction::between(r, b);

    int best = -1;
    Wide best_abs = 0;
    for (int c = 0; c < set.total(); ++c) {
        if (c == ri || c == bi) continue;
        const Wide cr = cross(base, Direction::between(r, set.point(c)));
        const Wide a = cr < 0 ? -cr : cr;
        if (best == -1 || a < best_abs) {
            best = c;
            best_abs = a;
        }
    }
    std::array<int, 3> tri = {ri, bi, best};
    std::sort(tri.begin(), tri.end());
    return {tri, classify_triangle(set, tri)};
}

namespace {

// Convex hull of a tiny point set, ccw, via monotone chain.
std::vector<Point> hull_of(std::vector<Point> v) {
    std::sort(v.begin(), v.end(), lex_less);
    const std::size_t n = v.size();
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && orient(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    h.resize(k - 1);
    return h;
}

bool strictly_inside_convex_ccw(const Point& p, const std::vector<Point>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(poly[i], poly[(i + 1) % n], p) <= 0) return false;
    }
    return true;
}

}  // namespace

long long count_k_holes(std::span<const Point> points, int k, int max_points) {
    if (k < 3 || k > 7) throw std::invalid_argument("count_k_holes: k must be in [3, 7]");
    const int total = static_cast<int>(points.size());
    if (total > max_points) {
        throw std::invalid_argument("count_k_holes: " + std::to_string(total) +
                                    " points exceed the brute-force budget of " +
                                    std::to_string(max_points));
    }
    if (total < k) return 0;
    if (!is_general_position(points)) {
        throw std::invalid_argument("count_k_holes: points not in general position");
    }

    long long holes = 0;
    std::vector<int> pick(k);
    std::vector<Point> subset(k);
    // Lexicographic enumeration of k-subsets.
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = points[pick[i]];
        const std::vector<Point> hull = hull_of(subset);
        if (static_cast<int>(hull.size()) == k) {
            bool empty = true;
            int next = 0;
            for (int q = 0; q < total && empty; ++q) {
                if (next < k && pick[next] == q) {
                    ++next;
                    continue;
                }
                if (strictly_inside_convex_ccw(points[q], hull)) empty = false;
            }
            if (empty) ++holes;
        }
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == total - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    return holes;
}

long long rrb_in_region(const ColoredPointSet& set, const ConvexRegion& region,
                        const Census& cached) {
    if (region.is_reflex()) {
        // For a non-convex region, emptiness inside the region would differ
        // from global emptiness and the filter below would be meaningless.
        throw std::invalid_argument("rrb_in_region: reflex sector is not a convex region");
    }
    if (!cached.triangles) {
        throw std::invalid_argument("rrb_in_region: census has no triangle list");
    }
    long long count = 0;
    for (const auto& tri : *cached.triangles) {
        if (classify_triangle(set, tri) != TriangleClass::rrb) continue;
        if (region.contains(set.point(tri[0])) && region.contains(set.point(tri[1])) &&
            region.contains(set.point(tri[2]))) {
            ++count;
        }
    }
    return count;
}

long long rrb_in_region(const ColoredPointSet& set, const ConvexRegion& region) {
    return rrb_in_region(set, region, census_fast(set, TriangleList::collect));
}

}  // namespace rrb
