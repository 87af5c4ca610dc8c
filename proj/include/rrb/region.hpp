#pragma once

#include <string>

#include "rrb/geometry.hpp"

namespace rrb {

// Plane, closed half-plane, or closed sector (apex + two boundary rays, swept
// counterclockwise from `from` to `to`). Sectors may be reflex (sweep > pi);
// such a region is not convex and is rejected by the discrepancy machinery.
// Membership is exact, decided by cross/dot signs only.
class ConvexRegion {
  public:
    enum class Kind { plane, half_plane, sector };

    static ConvexRegion plane() { return ConvexRegion(); }

    static ConvexRegion half_plane(Point anchor, Direction normal, bool closed = true) {
        ConvexRegion r;
        r.kind_ = Kind::half_plane;
        r.anchor_ = anchor;
        r.u_ = normal;
        r.closed_ = closed;
        return r;
    }

    static ConvexRegion sector(Point apex, Direction from, Direction to) {
        ConvexRegion r;
        r.kind_ = Kind::sector;
        r.anchor_ = apex;
        r.u_ = from;
        r.v_ = to;
        return r;
    }

    Kind kind() const { return kind_; }
    const Point& anchor() const { return anchor_; }
    const Direction& from() const { return u_; }
    const Direction& to() const { return v_; }
    bool closed() const { return closed_; }

    // Sweep angle strictly greater than pi. Coinciding boundary rays mean a
    // degenerate single-ray sector (sweep 0), not a full turn.
    bool is_reflex() const {
        return kind_ == Kind::sector && cross(u_, v_) < 0;
    }

    bool contains(const Point& p) const {
        switch (kind_) {
            case Kind::plane:
                return true;
            case Kind::half_plane: {
                const Wide s = Wide(u_.dx) * (p.x - anchor_.x) + Wide(u_.dy) * (p.y - anchor_.y);
                return closed_ ? s >= 0 : s > 0;
            }
            case Kind::sector: {
                if (p == anchor_) return true;
                const Direction w = Direction::between(anchor_, p);
                const Wide cf = cross(u_, v_);
                if (cf < 0) {
                    // Reflex: complement of the open sector from `to` ccw to `from`.
                    return !(cross(v_, w) > 0 && cross(w, u_) > 0);
                }
                if (cf == 0 && dot(u_, v_) > 0) {
                    // Single ray.
                    return cross(u_, w) == 0 && dot(u_, w) > 0;
                }
                // Sweep in (0, pi]: between both boundary rays, inclusively.
                return cross(u_, w) >= 0 && cross(w, v_) >= 0;
            }
        }
        return false;
    }

    std::string describe() const;

  private:
    ConvexRegion() = default;

    Kind kind_ = Kind::plane;
    Point anchor_;
    Direction u_;
    Direction v_;
    bool closed_ = true;
};

}  // namespace rrb
