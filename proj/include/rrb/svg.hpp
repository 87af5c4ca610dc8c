#pragma once

#include <string>

#include "rrb/certificate.hpp"
#include "rrb/point_set.hpp"
#include "rrb/sector_fan.hpp"

namespace rrb {

// Deterministic SVG 1.1 figures: points as filled circles, rays as lines,
// sectors as 10%-opacity wedges.
std::string render_points_svg(const ColoredPointSet& set);
std::string render_fan_svg(const ColoredPointSet& set, const SectorFan& fan);
std::string render_run_svg(const ColoredPointSet& set, const GoodSectorRun& run);

}  // namespace rrb
