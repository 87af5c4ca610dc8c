#include "rrb/point_set.hpp"

#include <string>
#include <utility>

namespace rrb {

namespace {

std::string point_str(const Point& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

ColoredPointSet ColoredPointSet::create(std::vector<Point> reds, std::vector<Point> blues) {
    std::vector<Point> pts = std::move(reds);
    const int n = static_cast<int>(pts.size());
    pts.insert(pts.end(), blues.begin(), blues.end());
    if (auto deg = find_degeneracy(pts)) {
        if (deg->kind == Degeneracy::Kind::duplicate) {
            throw std::invalid_argument("point set has duplicate point " + point_str(pts[deg->a]));
        }
        throw std::invalid_argument("point set is not in general position: collinear " +
                                    point_str(pts[deg->a]) + ", " + point_str(pts[deg->b]) +
                                    ", " + point_str(pts[deg->c]));
    }
    return create_unchecked(std::move(pts), n);
}

ColoredPointSet ColoredPointSet::create_unchecked(std::vector<Point> pts, int red_count) {
    ColoredPointSet s;
    s.pts_ = std::move(pts);
    s.n_ = red_count;
    return s;
}

ColoredPointSet ColoredPointSet::swapped_colors() const {
    std::vector<Point> pts;
    pts.reserve(pts_.size());
    pts.insert(pts.end(), pts_.begin() + n_, pts_.end());
    pts.insert(pts.end(), pts_.begin(), pts_.begin() + n_);
    return create_unchecked(std::move(pts), m());
}

}  // namespace rrb
