#pragma once

#include <vector>

#include "rrb/generators.hpp"
#include "rrb/point_set.hpp"

namespace rrb::testutil {

// Reds near the origin, blues in a small distant box: every red sees the
// blues inside a narrow angular cone, which keeps the minimum blue-sector
// count small and drives the certificate into its rotating-ray branch.
inline ColoredPointSet clustered_blues(int n, int m, std::uint64_t seed) {
    Rng rng(seed * 0x10001 + 7);
    std::vector<Point> pts;
    pts.reserve(n + m);
    auto admissible = [&](const Point& cand) {
        for (const Point& p : pts) {
            if (p == cand) return false;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (orient(pts[i], pts[j], cand) == 0) return false;
            }
        }
        return true;
    };
    int guard = 0;
    while (static_cast<int>(pts.size()) < n + m) {
        if (++guard > 100000) throw std::runtime_error("clustered_blues: rejection overflow");
        const bool red = static_cast<int>(pts.size()) < n;
        const Point cand = red ? Point(rng.uniform(-4000, 4000), rng.uniform(-4000, 4000))
                               : Point(rng.uniform(800000, 812000), rng.uniform(-6000, 6000));
        if (admissible(cand)) pts.push_back(cand);
    }
    return ColoredPointSet::create_unchecked(std::move(pts), n);
}

// Alternates uniform and clustered instances so sweeps hit both certificate
// branches.
inline ColoredPointSet sweep_instance(int n, int m, std::uint64_t seed) {
    if (seed % 3 == 2) return clustered_blues(n, m, seed);
    return gen_random_gp(n, m, seed % 3 == 0 ? 1000000 : 5000, seed);
}

}  // namespace rrb::testutil
