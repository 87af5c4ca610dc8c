#include "rrb/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rrb/census.hpp"

namespace rrb {

namespace {

bool move_is_valid(std::span<const Point> pts, int q, const Point& cand) {
    const int total = static_cast<int>(pts.size());
    for (int i = 0; i < total; ++i) {
        if (i != q && pts[i] == cand) return false;
    }
    for (int i = 0; i < total; ++i) {
        if (i == q) continue;
        for (int j = i + 1; j < total; ++j) {
            if (j == q) continue;
            if (orient(pts[i], pts[j], cand) == 0) return false;
        }
    }
    return true;
}

}  // namespace

SearchResult minimize_rrb(int n, int m, Coord box, const AnnealParams& params) {
    if (n < 2 || m < 2) throw std::invalid_argument("minimize_rrb: need n >= 2 and m >= 2");
    if (params.restarts < 1) throw std::invalid_argument("minimize_rrb: restarts must be >= 1");
    if (params.ratio_period < 1 || params.ratio <= 0.0 || params.ratio > 1.0) {
        throw std::invalid_argument("minimize_rrb: bad cooling schedule");
    }
    const int total = n + m;
    const Coord step = params.step > 0 ? params.step : std::max<Coord>(1, box / 16);

    SearchResult result;
    bool have_best = false;

    for (int restart = 0; restart < params.restarts; ++restart) {
        const std::uint64_t stream_seed = params.seed + static_cast<std::uint64_t>(restart);
        const ColoredPointSet start = gen_random_gp(n, m, box, stream_seed);
        std::vector<Point> pts(start.points().begin(), start.points().end());
        Rng rng(stream_seed ^ 0x5851f42d4c957f2dull);

        std::vector<long long> apex_rrb(total);
        long long current = 0;
        for (int a = 0; a < total; ++a) {
            apex_rrb[a] = census_apex(pts, n, a).count_rrb;
            current += apex_rrb[a];
        }
        long long restart_best = current;
        std::vector<Point> restart_best_pts = pts;
        const double t0 = params.t0 >= 0.0 ? params.t0
                                           : std::max(1.0, static_cast<double>(current) / 10.0);

        long long accepted_in_stream = 0;
        std::vector<int> affected;
        std::vector<long long> new_vals;
        for (long long iter = 0; iter < params.iterations; ++iter) {
            const double temperature =
                t0 * std::pow(params.ratio, static_cast<double>(iter / params.ratio_period));
            ++result.proposals;

            const int q = static_cast<int>(rng.uniform(0, total - 1));
            const Point old = pts[q];
            const Coord nx = old.x + rng.uniform(-step, step);
            const Coord ny = old.y + rng.uniform(-step, step);
            bool accepted = false;
            if (nx >= -box && nx <= box && ny >= -box && ny <= box && !(nx == old.x && ny == old.y)) {
                const Point cand(nx, ny);
                if (move_is_valid(pts, q, cand)) {
                    // Only apexes lexicographically below the moved point (in
                    // either position) can see their contribution change.
                    affected.clear();
                    for (int a = 0; a < total; ++a) {
                        if (a == q || lex_less(pts[a], old) || lex_less(pts[a], cand)) {
                            affected.push_back(a);
                        }
                    }
                    long long delta = 0;
                    pts[q] = cand;
                    new_vals.clear();
                    for (int a : affected) {
                        const long long v = census_apex(pts, n, a).count_rrb;
                        new_vals.push_back(v);
                        delta += v - apex_rrb[a];
                    }
                    const bool take =
                        delta <= 0 ||
                        rng.uniform01() < std::exp(-static_cast<double>(delta) /
                                                   std::max(temperature, 1e-12));
                    if (take) {
                        for (std::size_t i = 0; i < affected.size(); ++i) {
                            apex_rrb[affected[i]] = new_vals[i];
                        }
                        current += delta;
                        accepted = true;
                        ++result.accepted;
                        ++accepted_in_stream;
                        if (current < restart_best) {
                            restart_best = current;
                            restart_best_pts = pts;
                        }
                        if (params.audit_interval > 0 &&
                            accepted_in_stream % params.audit_interval == 0) {
                            const Census full = census_fast(
                                ColoredPointSet::create_unchecked(pts, n),
                                TriangleList::counts_only);
                            if (full.count_rrb != current) {
                                throw std::logic_error(
                                    "minimize_rrb: incremental count diverged from recount");
                            }
                        }
                    } else {
                        pts[q] = old;
                    }
                }
            }
            if (params.record_trace) {
                result.trace.push_back({restart, iter, current, temperature, accepted});
            }
        }

        const Census audit = census_fast(ColoredPointSet::create_unchecked(restart_best_pts, n),
                                         TriangleList::counts_only);
        if (audit.count_rrb != restart_best) {
            throw std::logic_error("minimize_rrb: best-count bookkeeping diverged");
        }
        if (!have_best || restart_best < result.best_count) {
            have_best = true;
            result.best_count = restart_best;
            result.best = ColoredPointSet::create_unchecked(std::move(restart_best_pts), n);
        }
    }
    return result;
}

std::string trace_csv(std::span<const TraceRow> rows) {
    std::string out = "restart,iteration,count,temperature,accepted\n";
    char buf[96];
    for (const TraceRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%.9g,%d\n", r.restart, r.iteration,
                      r.count, r.temperature, r.accepted ? 1 : 0);
        out += buf;
    }
    return out;
}

std::vector<HortonScanRow> horton_bicoloring_scan(int k_min, int k_max,
                                                  std::span<const ColoringScheme> schemes) {
    if (k_min < 1 || k_max > 10 || k_min > k_max) {
        throw std::invalid_argument(
            "horton_bicoloring_scan: need 1 <= k_min <= k_max <= 10 (census budget)");
    }
    std::vector<HortonScanRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        const std::vector<Point> pts = gen_horton(k);
        for (const ColoringScheme& scheme : schemes) {
            const ColoredPointSet set = bicolor(pts, scheme);
            const Census census = census_fast(set, TriangleList::counts_only);
            const double reds = static_cast<double>(set.n());
            rows.push_back({k, scheme.name(), set.total(), set.n(), census.count_rrb,
                            reds > 0 ? static_cast<double>(census.count_rrb) / (reds * reds)
                                     : 0.0});
        }
    }
    return rows;
}

std::string horton_scan_csv(std::span<const HortonScanRow> rows) {
    std::string out = "k,scheme,points,reds,count_rrb,rrb_over_n_squared\n";
    char buf[160];
    for (const HortonScanRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%s,%d,%d,%lld,%.9g\n", r.size_log2,
                      r.scheme.c_str(), r.points, r.reds, r.count_rrb, r.ratio);
        out += buf;
    }
    return out;
}

}  // namespace rrb
