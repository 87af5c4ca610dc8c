#include "rrb/region.hpp"

namespace rrb {

std::string ConvexRegion::describe() const {
    switch (kind_) {
        case Kind::plane:
            return "plane";
        case Kind::half_plane:
            return "half-plane{anchor=(" + std::to_string(anchor_.x) + "," +
                   std::to_string(anchor_.y) + "), normal=(" + std::to_string(u_.dx) + "," +
                   std::to_string(u_.dy) + "), " + (closed_ ? "closed" : "open") + "}";
        case Kind::sector:
            return std::string(is_reflex() ? "reflex-sector" : "sector") + "{apex=(" +
                   std::to_string(anchor_.x) + "," + std::to_string(anchor_.y) + "), from=(" +
                   std::to_string(u_.dx) + "," + std::to_string(u_.dy) + "), to=(" +
                   std::to_string(v_.dx) + "," + std::to_string(v_.dy) + ")}";
    }
    return "?";
}

}  // namespace rrb
