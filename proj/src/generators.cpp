#include "rrb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rrb {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

namespace {

bool breaks_general_position(const std::vector<Point>& chosen, const Point& cand) {
    for (const Point& p : chosen) {
        if (p == cand) return true;
    }
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            if (orient(chosen[i], chosen[j], cand) == 0) return true;
        }
    }
    return false;
}

}  // namespace

ColoredPointSet gen_random_gp(int n, int m, Coord box, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("gen_random_gp: negative count");
    if (box < 0 || box > kCoordLimit) throw std::invalid_argument("gen_random_gp: bad box");
    const int total = n + m;
    const Wide cells = (Wide(2) * box + 1) * (Wide(2) * box + 1);
    if (cells < Wide(4) * total) {
        throw std::invalid_argument("gen_random_gp: box too small for " + std::to_string(total) +
                                    " points in general position");
    }

    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(total);
    long long attempts = 0;
    const long long budget = 400LL * total + 1000;
    while (static_cast<int>(pts.size()) < total) {
        if (++attempts > budget) {
            throw std::runtime_error("gen_random_gp: rejection budget exhausted (box too small)");
        }
        const Point cand(rng.uniform(-box, box), rng.uniform(-box, box));
        if (breaks_general_position(pts, cand)) continue;
        pts.push_back(cand);
    }
    return ColoredPointSet::create_unchecked(std::move(pts), n);
}

std::pair<std::int64_t, std::int64_t> default_circle_shrink(int n) {
    const std::int64_t den = 1000LL * n;
    return {den - 1, den};
}

namespace {

// |p|^2 compared against (radius * num / den + off)^2, exactly.
bool norm_exceeds(const Point& p, Coord radius, std::int64_t num, std::int64_t den,
                  std::int64_t off) {
    const Wide lhs = (Wide(p.x) * p.x + Wide(p.y) * p.y) * den * den;
    const Wide edge = Wide(radius) * num + Wide(off) * den;
    return lhs > edge * edge;
}

bool norm_below(const Point& p, Coord radius, std::int64_t num, std::int64_t den,
                std::int64_t off) {
    const Wide lhs = (Wide(p.x) * p.x + Wide(p.y) * p.y) * den * den;
    const Wide edge = Wide(radius) * num + Wide(off) * den;
    return lhs < edge * edge;
}

bool convex_position_ccw(const std::vector<Point>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) != 1) return false;
    }
    return true;
}

}  // namespace

ColoredPointSet gen_circle_pair(int n, Coord radius, std::int64_t shrink_num,
                                std::int64_t shrink_den) {
    if (n < 3) throw std::invalid_argument("gen_circle_pair: n must be at least 3");
    if (shrink_num <= 0 || shrink_num >= shrink_den) {
        throw std::invalid_argument("gen_circle_pair: need 0 < shrink_num < shrink_den");
    }
    if (radius < 1) throw std::invalid_argument("gen_circle_pair: radius must be positive");

    // Fixed rotation away from the grid axes. At axis-aligned angles the
    // ideal construction rounds exactly, and for even n the two antipodal
    // red/blue pairs of a diameter are four collinear points no radius can
    // fix; off-axis angles leave it to rounding noise, which the doubling
    // retry below resolves.
    constexpr long double kPhase = 0.37L;
    for (Coord r = radius; r <= kCoordLimit; r *= 2) {
        const long double rf = static_cast<long double>(r);
        const long double bf = rf * static_cast<long double>(shrink_num) /
                               static_cast<long double>(shrink_den);
        std::vector<Point> reds, blues;
        reds.reserve(n);
        blues.reserve(n);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            const long double theta =
                2.0L * std::numbers::pi_v<long double> * j / n + kPhase;
            const long double c = std::cos(theta), s = std::sin(theta);
            const Coord rx = llroundl(rf * c), ry = llroundl(rf * s);
            const Coord bx = llroundl(bf * c), by = llroundl(bf * s);
            if (std::max({rx < 0 ? -rx : rx, ry < 0 ? -ry : ry}) > kCoordLimit) {
                ok = false;
                break;
            }
            reds.emplace_back(rx, ry);
            blues.emplace_back(bx, by);
        }
        if (!ok) break;

        // Ring separation with +-2 slack for grid rounding.
        for (int j = 0; j < n && ok; ++j) {
            if (!norm_exceeds(reds[j], r, shrink_num, shrink_den, 2)) ok = false;
            if (!norm_below(blues[j], r, 1, 1, -2)) ok = false;
        }
        if (ok && !convex_position_ccw(reds)) ok = false;
        if (ok) {
            std::vector<Point> all = reds;
            all.insert(all.end(), blues.begin(), blues.end());
            if (find_degeneracy(all)) ok = false;
        }
        if (ok) {
            std::vector<Point> pts = std::move(reds);
            pts.insert(pts.end(), blues.begin(), blues.end());
            return ColoredPointSet::create_unchecked(std::move(pts), n);
        }
        if (r > kCoordLimit / 2) break;
    }
    throw std::runtime_error(
        "gen_circle_pair: could not reach general position within the coordinate bound");
}

namespace {

Coord floor_div(Coord a, Coord b) {
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

// Minimal integer shift d so that (a) every point of `upper` raised by d lies
// strictly above every line through two points of `lower`, and (b) every
// point of `lower` lies strictly below every line through two points of the
// raised `upper`. All x coordinates are distinct.
Coord minimal_separation_shift(const std::vector<Point>& lower, const std::vector<Point>& upper) {
    Coord d = 1;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        for (std::size_t j = i + 1; j < lower.size(); ++j) {
            const Point &a = lower[i], &b = lower[j];
            const Coord dx = b.x - a.x;
            for (const Point& u : upper) {
                // u.y + d > a.y + (b.y - a.y)(u.x - a.x)/dx
                const Coord num = (b.y - a.y) * (u.x - a.x);
                const Coord bound = floor_div(num, dx) + a.y - u.y + 1;
                d = std::max(d, bound);
            }
        }
    }
    for (std::size_t i = 0; i < upper.size(); ++i) {
        for (std::size_t j = i + 1; j < upper.size(); ++j) {
            const Point &c = upper[i], &e = upper[j];
            const Coord dx = e.x - c.x;
            for (const Point& l : lower) {
                // l.y < c.y + d + (e.y - c.y)(l.x - c.x)/dx
                const Coord num = (e.y - c.y) * (l.x - c.x);
                const Coord bound = l.y - c.y - ceil_div(num, dx) + 1;
                d = std::max(d, bound);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<Point> gen_horton(int size_log2) {
    if (size_log2 < 0 || size_log2 > 12) {
        throw std::invalid_argument("gen_horton: size_log2 must be in [0, 12]");
    }
    std::vector<Point> pts = {Point(0, 0)};
    for (int level = 0; level < size_log2; ++level) {
        std::vector<Point> lower, upper;
        lower.reserve(pts.size());
        upper.reserve(pts.size());
        for (const Point& p : pts) {
            if (2 * p.x + 1 > kCoordLimit) {
                throw std::runtime_error("gen_horton: coordinate bound exceeded at k=" +
                                         std::to_string(size_log2));
            }
            lower.emplace_back(2 * p.x, p.y);
            upper.emplace_back(2 * p.x + 1, p.y);
        }
        const Coord d = minimal_separation_shift(lower, upper);
        std::vector<Point> next;
        next.reserve(2 * pts.size());
        for (std::size_t i = 0; i < lower.size(); ++i) {
            const Coord uy = upper[i].y + d;
            if (uy > kCoordLimit) {
                throw std::runtime_error("gen_horton: coordinate bound exceeded at k=" +
                                         std::to_string(size_log2));
            }
            next.push_back(lower[i]);
            next.emplace_back(upper[i].x, uy);
        }
        pts = std::move(next);
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    return pts;
}

std::string ColoringScheme::name() const {
    switch (kind) {
        case Kind::alternating_by_index:
            return "alternating";
        case Kind::random:
            return "random(" + std::to_string(seed) + ")";
        case Kind::by_x_parity:
            return "x-parity";
    }
    return "?";
}

ColoringScheme ColoringScheme::parse(const std::string& text) {
    if (text == "alternating") return alternating();
    if (text == "x-parity" || text == "xparity") return x_parity();
    if (text.rfind("random", 0) == 0) {
        std::uint64_t seed = 0;
        const auto open = text.find('(');
        if (open != std::string::npos) {
            seed = std::stoull(text.substr(open + 1));
        }
        return random(seed);
    }
    throw std::invalid_argument("unknown coloring scheme: " + text);
}

ColoredPointSet bicolor(const std::vector<Point>& points, const ColoringScheme& scheme) {
    const int total = static_cast<int>(points.size());
    std::vector<char> is_red(points.size(), 0);
    switch (scheme.kind) {
        case ColoringScheme::Kind::alternating_by_index: {
            if (total % 2 != 0) {
                throw std::invalid_argument("bicolor: alternating scheme requires an even count");
            }
            for (int i = 0; i < total; ++i) is_red[i] = (i % 2 == 0);
            break;
        }
        case ColoringScheme::Kind::random: {
            std::vector<int> idx(points.size());
            for (int i = 0; i < total; ++i) idx[i] = i;
            Rng rng(scheme.seed);
            for (int i = total - 1; i > 0; --i) {
                const int j = static_cast<int>(rng.uniform(0, i));
                std::swap(idx[i], idx[j]);
            }
            const int reds = (total + 1) / 2;
            for (int i = 0; i < reds; ++i) is_red[idx[i]] = 1;
            break;
        }
        case ColoringScheme::Kind::by_x_parity: {
            for (int i = 0; i < total; ++i) is_red[i] = ((points[i].x % 2 + 2) % 2 == 0);
            break;
        }
    }
    std::vector<Point> reds, blues;
    for (int i = 0; i < total; ++i) {
        (is_red[i] ? reds : blues).push_back(points[i]);
    }
    std::vector<Point> pts = std::move(reds);
    const int n = static_cast<int>(pts.size());
    pts.insert(pts.end(), blues.begin(), blues.end());
    return ColoredPointSet::create_unchecked(std::move(pts), n);
}

}  // namespace rrb
