#include "rrb/geometry.hpp"

#include <algorithm>

namespace rrb {

bool point_in_triangle_strict(const Point& p, const Point& a, const Point& b, const Point& c) {
    const int s = orient(a, b, c);
    if (s == 0) throw std::invalid_argument("point_in_triangle_strict: collinear triangle");
    return orient(a, b, p) == s && orient(b, c, p) == s && orient(c, a, p) == s;
}

namespace {

// Angle class relative to a reference direction: 0 for [0, pi), 1 for [pi, 2pi).
int half_of(const Direction& start, const Direction& d) {
    const Wide c = cross(start, d);
    if (c > 0) return 0;
    if (c < 0) return 1;
    return dot(start, d) > 0 ? 0 : 1;
}

}  // namespace

std::strong_ordering ccw_compare(const Point& apex, const Point& u, const Point& v,
                                 const Direction& start) {
    if (u == apex || v == apex) throw std::invalid_argument("ccw_compare: point equals apex");
    const Direction du = Direction::between(apex, u);
    const Direction dv = Direction::between(apex, v);
    const int hu = half_of(start, du);
    const int hv = half_of(start, dv);
    if (hu != hv) return hu < hv ? std::strong_ordering::less : std::strong_ordering::greater;
    const Wide c = cross(du, dv);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    // Same ray from the apex: closer point first.
    const Wide nu = dot(du, du);
    const Wide nv = dot(dv, dv);
    if (nu < nv) return std::strong_ordering::less;
    if (nu > nv) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// Class of the ccw angle from u to v: 0 -> angle 0, 1 -> (0, pi), 2 -> pi,
// 3 -> (pi, 2pi).
int angle_class(const Direction& u, const Direction& v) {
    const Wide c = cross(u, v);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(u, v) > 0 ? 0 : 2;
}

// Both angles in (0, pi): compare via cotangents, which are strictly
// decreasing there. cot = dot/cross with cross > 0.
std::strong_ordering acute_range_compare(const Direction& u1, const Direction& v1,
                                         const Direction& u2, const Direction& v2) {
    const Wide lhs = dot(u1, v1) * cross(u2, v2);
    const Wide rhs = dot(u2, v2) * cross(u1, v1);
    if (lhs > rhs) return std::strong_ordering::less;
    if (lhs < rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering angle_compare(const Direction& u1, const Direction& v1,
                                   const Direction& u2, const Direction& v2) {
    const int c1 = angle_class(u1, v1);
    const int c2 = angle_class(u2, v2);
    if (c1 != c2) return c1 < c2 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (c1 == 0 || c1 == 2) return std::strong_ordering::equal;
    if (c1 == 1) return acute_range_compare(u1, v1, u2, v2);
    // (pi, 2pi): subtract pi by reversing the first leg.
    return acute_range_compare(u1.reversed(), v1, u2.reversed(), v2);
}

std::optional<Degeneracy> find_degeneracy(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    if (n < 2) return std::nullopt;

    // Duplicates via a lexicographic sort of indices.
    {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return lex_less(pts[a], pts[b]); });
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (pts[idx[i]] == pts[idx[i + 1]]) {
                return Degeneracy{Degeneracy::Kind::duplicate, idx[i], idx[i + 1], idx[i + 1]};
            }
        }
    }
    if (n < 3) return std::nullopt;

    // A collinear triple through p shows up as two other points whose
    // directions from p agree modulo pi. Sorting the canonicalized directions
    // around every point finds any such pair.
    std::vector<std::pair<Direction, std::size_t>> dirs;
    dirs.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        dirs.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Direction d = Direction::between(pts[i], pts[j]);
            if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) d = d.reversed();
            dirs.emplace_back(d, j);
        }
        std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
            return cross(a.first, b.first) > 0;
        });
        for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
            if (cross(dirs[k].first, dirs[k + 1].first) == 0) {
                return Degeneracy{Degeneracy::Kind::collinear, i, dirs[k].second,
                                  dirs[k + 1].second};
            }
        }
    }
    return std::nullopt;
}

}  // namespace rrb
