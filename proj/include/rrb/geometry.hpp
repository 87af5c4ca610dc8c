#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrb {

using Coord = std::int64_t;
using Wide = __int128;

// Largest coordinate magnitude. With |x|,|y| <= 2^30 every three-point
// orientation determinant and every direction dot/cross product stays well
// inside signed 128-bit range, so all predicates below are exact.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;

    Point() = default;
    Point(Coord px, Coord py) : x(px), y(py) {
        if (px < -kCoordLimit || px > kCoordLimit || py < -kCoordLimit || py > kCoordLimit) {
            throw std::invalid_argument("Point coordinate exceeds 2^30: (" + std::to_string(px) +
                                        ", " + std::to_string(py) + ")");
        }
    }

    friend bool operator==(const Point&, const Point&) = default;
};

inline bool lex_less(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Unnormalized integer direction. Stored as-is; two directions are "equal"
// when they are positive multiples of each other.
struct Direction {
    Coord dx = 1;
    Coord dy = 0;

    Direction() = default;
    Direction(Coord vx, Coord vy) : dx(vx), dy(vy) {
        if (vx == 0 && vy == 0) throw std::invalid_argument("Direction cannot be (0, 0)");
    }

    static Direction between(const Point& from, const Point& to) {
        if (from == to) throw std::invalid_argument("Direction between identical points");
        return Direction(to.x - from.x, to.y - from.y);
    }

    Direction reversed() const { return Direction(-dx, -dy); }
};

inline Wide cross(const Direction& u, const Direction& v) {
    return Wide(u.dx) * v.dy - Wide(u.dy) * v.dx;
}

inline Wide dot(const Direction& u, const Direction& v) {
    return Wide(u.dx) * v.dx + Wide(u.dy) * v.dy;
}

inline bool same_direction(const Direction& u, const Direction& v) {
    return cross(u, v) == 0 && dot(u, v) > 0;
}

inline int sign_of(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of (b-a) x (c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
inline int orient(const Point& a, const Point& b, const Point& c) {
    const Wide lhs = Wide(b.x - a.x) * (c.y - a.y);
    const Wide rhs = Wide(b.y - a.y) * (c.x - a.x);
    return sign_of(lhs - rhs);
}

// Strict interior test. Requires a, b, c not collinear.
bool point_in_triangle_strict(const Point& p, const Point& a, const Point& b, const Point& c);

// Total order of u and v by the counterclockwise angle of (u-apex), (v-apex)
// measured from `start` in [0, 2pi); equal angles are ordered by distance
// from the apex (closer first). Exact; no trigonometry.
std::strong_ordering ccw_compare(const Point& apex, const Point& u, const Point& v,
                                 const Direction& start);

// Compares the ccw angle from u1 to v1 against the ccw angle from u2 to v2,
// both taken in [0, 2pi). Inputs must come from coordinate differences
// (components bounded by 2^31) so the cross/dot products cannot overflow.
std::strong_ordering angle_compare(const Direction& u1, const Direction& v1,
                                   const Direction& u2, const Direction& v2);

struct Degeneracy {
    enum class Kind { duplicate, collinear } kind;
    // Indices into the input span; for duplicates only a and b are meaningful.
    std::size_t a = 0, b = 0, c = 0;
};

// First duplicate pair or collinear triple, if any. O(n^2 log n).
std::optional<Degeneracy> find_degeneracy(std::span<const Point> pts);

inline bool is_general_position(std::span<const Point> pts) {
    return !find_degeneracy(pts).has_value();
}

}  // namespace rrb
