#include "rrb/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "rrb/sector_fan.hpp"

namespace rrb {

namespace {

// Scan-frame angle class of direction d relative to (axis, half):
// 0 = positive axis, 1 = strictly inside the half, 2 = negative axis,
// 3 = outside the half.
int scan_class(const Direction& axis, HalfChoice half, const Direction& d) {
    const Wide c = cross(axis, d);
    if (c == 0) return dot(axis, d) > 0 ? 0 : 2;
    const bool inside = (half == HalfChoice::ccw) ? c > 0 : c < 0;
    return inside ? 1 : 3;
}

// Strict order by scan angle; valid for directions in classes 0..2.
bool scan_angle_less(const Direction& axis, HalfChoice half, const Direction& a,
                     const Direction& b) {
    const int ca = scan_class(axis, half, a);
    const int cb = scan_class(axis, half, b);
    if (ca != cb) return ca < cb;
    if (ca != 1) return false;
    const Wide c = cross(a, b);
    return (half == HalfChoice::ccw) ? c > 0 : c < 0;
}

std::string run_context(const ColoredPointSet& set, int r0, const Direction& axis) {
    return " [r0=" + std::to_string(r0) + " axis=(" + std::to_string(axis.dx) + "," +
           std::to_string(axis.dy) + ") n=" + std::to_string(set.n()) +
           " m=" + std::to_string(set.m()) + "]";
}

}  // namespace

long long GoodSectorRun::sum_step_reds() const {
    long long s = 0;
    for (const GoodSector& g : steps) s += g.reds;
    return s;
}

ConvexRegion GoodSectorRun::step_region(int i) const {
    const GoodSector& g = steps[static_cast<std::size_t>(i)];
    return half == HalfChoice::ccw ? ConvexRegion::sector(apex, g.from, g.to)
                                   : ConvexRegion::sector(apex, g.to, g.from);
}

ConvexRegion GoodSectorRun::terminal_region() const {
    const Direction neg = axis.reversed();
    if (terminal.axis_ray_only) return ConvexRegion::sector(apex, neg, neg);
    return half == HalfChoice::ccw ? ConvexRegion::sector(apex, terminal.from, neg)
                                   : ConvexRegion::sector(apex, neg, terminal.from);
}

BisectResult bisecting_line(const ColoredPointSet& set, int r0) {
    const int n = set.n();
    const int m = set.m();
    if (n < 5) {
        throw std::invalid_argument(
            "bisecting_line: needs n >= 5; smaller sets use the min-sector bound branch");
    }
    if (r0 < 0 || r0 >= n) throw std::invalid_argument("bisecting_line: bad red index");
    const Point origin = set.point(r0);

    auto strict_red_balance = [&](const Direction& axis, int skip) {
        int left = 0, right = 0;
        for (int r = 0; r < n; ++r) {
            if (r == r0 || r == skip) continue;
            const Wide c = cross(axis, Direction::between(origin, set.point(r)));
            if (c > 0) ++left;
            else if (c < 0) ++right;
            else return false;  // another point on the line
        }
        return left == right;
    };
    auto any_blue_on_line = [&](const Direction& axis) {
        for (int b = n; b < set.total(); ++b) {
            if (cross(axis, Direction::between(origin, set.point(b))) == 0) return true;
        }
        return false;
    };

    std::optional<Direction> axis;
    if (n % 2 == 0) {
        // The line passes through exactly one other red, kept on the
        // positive axis so the scan window holds it from the start.
        for (int r = 0; r < n && !axis; ++r) {
            if (r == r0) continue;
            const Direction cand = Direction::between(origin, set.point(r));
            if (strict_red_balance(cand, r)) axis = cand;
        }
    } else {
        // Candidate directions between consecutive canonicalized event
        // directions of the merged red+blue list: such a mediant line passes
        // through no point of either color.
        std::vector<Direction> events;
        events.reserve(set.total() - 1);
        for (int i = 0; i < set.total(); ++i) {
            if (i == r0) continue;
            Direction d = Direction::between(origin, set.point(i));
            if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) d = d.reversed();
            events.push_back(d);
        }
        std::sort(events.begin(), events.end(),
                  [](const Direction& a, const Direction& b) { return cross(a, b) > 0; });
        const std::size_t count = events.size();
        for (std::size_t i = 0; i < count && !axis; ++i) {
            Direction cand = (i + 1 < count)
                                 ? Direction(events[i].dx + events[i + 1].dx,
                                             events[i].dy + events[i + 1].dy)
                                 : Direction(events[count - 1].dx - events[0].dx,
                                             events[count - 1].dy - events[0].dy);
            if (strict_red_balance(cand, -1)) axis = cand;
        }
    }
    if (!axis) throw std::logic_error("bisecting_line: no balanced direction found" +
                                      run_context(set, r0, Direction{1, 0}));
    if (any_blue_on_line(*axis)) {
        throw std::logic_error("bisecting_line: blue on the chosen line" +
                               run_context(set, r0, *axis));
    }

    int blues_left = 0;
    for (int b = n; b < set.total(); ++b) {
        if (cross(*axis, Direction::between(origin, set.point(b))) > 0) ++blues_left;
    }
    const int need = (m + 1) / 2;
    BisectResult res;
    res.axis = *axis;
    res.half = blues_left >= need ? HalfChoice::ccw : HalfChoice::cw;
    res.blues_in_half = res.half == HalfChoice::ccw ? blues_left : m - blues_left;

    int closed = 1;  // r0
    for (int r = 0; r < n; ++r) {
        if (r == r0) continue;
        const int cls = scan_class(*axis, res.half, Direction::between(origin, set.point(r)));
        if (cls != 3) ++closed;
    }
    res.reds_in_closed_half = closed;
    if (closed != (n + 2) / 2) {
        throw std::logic_error("bisecting_line: closed half holds " + std::to_string(closed) +
                               " reds, expected " + std::to_string((n + 2) / 2) +
                               run_context(set, r0, *axis));
    }
    return res;
}

GoodSectorRun good_sector_run(const ColoredPointSet& set, int r0, const Direction& axis,
                              HalfChoice half) {
    const int n = set.n();
    if (n < 1 || r0 < 0 || r0 >= n) throw std::invalid_argument("good_sector_run: bad r0");

    GoodSectorRun run;
    run.r0 = r0;
    run.apex = set.point(r0);
    run.axis = axis;
    run.half = half;

    struct Event {
        Direction dir;
        bool red;
    };
    std::vector<Event> events;
    for (int i = 0; i < set.total(); ++i) {
        if (i == r0) continue;
        const Direction d = Direction::between(run.apex, set.point(i));
        const int cls = scan_class(axis, half, d);
        if (cls == 3) continue;
        const bool red = set.color(i) == Color::red;
        if (!red && cls != 1) {
            throw std::invalid_argument("good_sector_run: blue point on the axis line" +
                                        run_context(set, r0, axis));
        }
        events.push_back({d, red});
        (red ? run.reds_in_half : run.blues_in_half) += 1;
    }
    run.reds_in_half += 1;  // r0 itself
    std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
        return scan_angle_less(axis, half, a.dir, b.dir);
    });

    bool filling = false;
    Direction window_from{1, 0};
    int reds = 0, blues = 0;
    for (const Event& e : events) {
        if (!filling) {
            if (!e.red) continue;  // blues ahead of the first red of a step join no sector
            filling = true;
            window_from = e.dir;
            reds = 2;  // r0 and the red just hit
            blues = 0;
            continue;
        }
        if (e.red) {
            ++reds;
            continue;
        }
        ++blues;
        if (3 * blues >= reds) {
            if (blues != (reds + 2) / 3) {
                throw std::logic_error("good_sector_run: window closed away from ceil(reds/3)" +
                                       run_context(set, r0, axis));
            }
            run.steps.push_back({window_from, e.dir, reds, blues});
            filling = false;
        }
    }
    if (filling) {
        run.terminal = {window_from, false, reds, blues};
    } else {
        run.terminal = {axis.reversed(), true, 1, 0};
    }
    if (3 * run.terminal.blues >= run.terminal.reds) {
        throw std::logic_error("good_sector_run: terminal sector reached blues >= reds/3" +
                               run_context(set, r0, axis));
    }
    long long reds_accounted = run.terminal.reds;
    for (const GoodSector& g : run.steps) reds_accounted += g.reds;
    if (reds_accounted != run.reds_in_half + run.k()) {
        throw std::logic_error("good_sector_run: red count identity violated" +
                               run_context(set, r0, axis));
    }
    return run;
}

bool terminals_disjoint(const GoodSectorRun& forward, const GoodSectorRun& reflected) {
    const Direction t_from =
        forward.terminal.axis_ray_only ? forward.axis.reversed() : forward.terminal.from;
    const Direction tp_from =
        reflected.terminal.axis_ray_only ? forward.axis : reflected.terminal.from;
    return scan_angle_less(forward.axis, forward.half, tp_from, t_from);
}

const GoodSectorRun& Certificate::chosen() const {
    if (branch != Branch::good_sector || chosen_run < 0) {
        throw std::logic_error("Certificate::chosen: no good-sector run");
    }
    return chosen_run == 0 ? *forward : *reflected;
}

bool Certificate::count_floor_holds(long long rrb) const {
    if (rrb < 0) return false;
    const Wide cube = Wide(n) * n * n;
    if (rrb > (Wide(1) << 45)) return true;  // (72*rrb)^2 >= 2^90 >= n^3 for n <= 2^30
    const Wide side = Wide(72) * rrb;
    return cube <= side * side;
}

const char* branch_name(Certificate::Branch b) {
    return b == Certificate::Branch::min_sector ? "min-sector" : "good-sector";
}

Certificate assemble_certificate(const ColoredPointSet& set) {
    const int n = set.n();
    const int m = set.m();
    if (n < 2) throw std::invalid_argument("assemble_certificate: need n >= 2");
    if (m < n) {
        throw std::invalid_argument(
            "assemble_certificate: requires m >= n; swap the colors to certify rbb instead");
    }

    Certificate cert;
    cert.n = n;
    cert.m = m;
    const auto [p, r0] = p_min(set);
    cert.p = p;
    cert.r0 = r0;

    const long long pn = static_cast<long long>(p) * n;
    if (static_cast<long long>(p) * p > n || n < 5) {
        cert.branch = Certificate::Branch::min_sector;
        cert.lower_bound = Rat(pn, 2);
        return cert;
    }

    cert.branch = Certificate::Branch::good_sector;
    const BisectResult bis = bisecting_line(set, r0);
    cert.forward = good_sector_run(set, r0, bis.axis, bis.half);
    cert.reflected = good_sector_run(set, r0, bis.axis.reversed(), opposite(bis.half));

    const GoodSectorRun& fwd = *cert.forward;
    const GoodSectorRun& refl = *cert.reflected;
    auto fail = [&](const std::string& what) {
        throw std::logic_error("assemble_certificate: " + what +
                               run_context(set, r0, bis.axis));
    };
    if (fwd.reds_in_half != bis.reds_in_closed_half || refl.reds_in_half != fwd.reds_in_half) {
        fail("closed-half red counts disagree");
    }
    if (fwd.k() > p || refl.k() > p) fail("k exceeds the minimum blue-sector count");

    if (!terminals_disjoint(fwd, refl)) {
        fail("terminal sectors overlap beyond the apex");
    }
    if (fwd.terminal.reds + refl.terminal.reds > fwd.reds_in_half + 1) {
        fail("terminal red counts exceed |R(H)| + 1");
    }

    if (2 * fwd.terminal.reds <= fwd.reds_in_half + 1) {
        cert.chosen_run = 0;
    } else if (2 * refl.terminal.reds <= refl.reds_in_half + 1) {
        cert.chosen_run = 1;
    } else {
        fail("neither run has a small terminal sector");
    }
    const GoodSectorRun& run = cert.chosen();
    if (run.k() < 1) fail("chosen run produced no good sector");
    const long long sum_reds = run.sum_step_reds();
    if (4 * sum_reds < n) fail("chosen run's step reds sum below n/4");

    long long sum_sq = 0;
    for (const GoodSector& g : run.steps) sum_sq += static_cast<long long>(g.reds) * g.reds;
    cert.lower_bound = max(Rat(pn, 2), Rat(2 * sum_sq, 9));
    return cert;
}

}  // namespace rrb
