#include "rrb/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "rrb/census.hpp"
#include "rrb/certificate.hpp"
#include "rrb/sector_fan.hpp"

namespace rrb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct NamedRegion {
    std::string group;
    ConvexRegion region;
};

}  // namespace

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const CheckRecord& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

bool rrb_count_floor_holds(int n, long long rrb) {
    if (rrb < 0) return false;
    if (rrb > (1LL << 45)) return true;  // (72*rrb)^2 >= 2^90 >= n^3 for n <= 2^30
    const Wide side = Wide(72) * rrb;
    return Wide(n) * n * n <= side * side;
}

bool ceiling_fact_scan(long long limit) {
    if (limit < 2) throw std::invalid_argument("ceiling_fact_scan: limit must be at least 2");
    for (long long x = 2; x <= limit; ++x) {
        const long long c = (x + 2) / 3;
        if (9 * c * (x - c) < 2 * x * x) return false;
    }
    return true;
}

VerificationReport verify_all(const ColoredPointSet& set, VerifyDepth depth) {
    if (auto deg = find_degeneracy(set.points())) {
        throw std::invalid_argument("verify_all: input set is invalid (" +
                                    std::string(deg->kind == Degeneracy::Kind::duplicate
                                                    ? "duplicate point"
                                                    : "collinear triple") +
                                    ")");
    }

    VerificationReport report;
    report.n = set.n();
    report.m = set.m();
    report.instance_fingerprint = fingerprint(set);
    const int n = set.n(), m = set.m(), total = set.total();

    auto add = [&](std::string name, std::string detail, std::string lhs, std::string rhs,
                   bool pass) {
        report.checks.push_back(
            {std::move(name), std::move(detail), std::move(lhs), std::move(rhs), pass});
    };

    // Census. The triangle list backs the region checks; above 400 points the
    // list is withheld and region checks report as skipped.
    auto t_census = Clock::now();
    const bool with_list = total <= 400;
    const Census fast =
        census_fast(set, with_list ? TriangleList::collect : TriangleList::counts_only);
    report.timings_ms.emplace_back("census_fast", ms_since(t_census));

    const int oracle_cap = depth == VerifyDepth::quick ? 60 : 40;
    if (total <= oracle_cap) {
        auto t_oracle = Clock::now();
        const Census oracle =
            census_oracle(set, with_list ? TriangleList::collect : TriangleList::counts_only);
        report.timings_ms.emplace_back("census_oracle", ms_since(t_oracle));
        const bool same = oracle.count_rrr == fast.count_rrr &&
                          oracle.count_rrb == fast.count_rrb &&
                          oracle.count_rbb == fast.count_rbb &&
                          oracle.count_bbb == fast.count_bbb &&
                          oracle.triangles == fast.triangles;
        add("census-cross-check", "fast sweep vs exhaustive oracle",
            std::to_string(fast.total()), std::to_string(oracle.total()), same);
    } else {
        add("census-cross-check", "skipped: " + std::to_string(total) + " points exceed the " +
                                      std::to_string(oracle_cap) + "-point oracle cap",
            "-", "-", true);
    }

    // Pair witnesses.
    if (n >= 1 && m >= 1 && total >= 3) {
        auto t = Clock::now();
        long long pairs = 0, good = 0;
        for (int r = 0; r < n; ++r) {
            for (int b = 0; b < m; ++b) {
                ++pairs;
                const Witness w = witness_for_pair(set, r, b);
                bool empty = true;
                for (int q = 0; q < total && empty; ++q) {
                    if (q == w.triangle[0] || q == w.triangle[1] || q == w.triangle[2]) continue;
                    empty = !point_in_triangle_strict(set.point(q), set.point(w.triangle[0]),
                                                      set.point(w.triangle[1]),
                                                      set.point(w.triangle[2]));
                }
                const bool bichromatic =
                    w.cls == TriangleClass::rrb || w.cls == TriangleClass::rbb;
                if (empty && bichromatic) ++good;
            }
        }
        report.timings_ms.emplace_back("pair_witnesses", ms_since(t));
        add("pair-witness", "every red-blue pair spans an empty bichromatic triangle",
            std::to_string(good), std::to_string(pairs), good == pairs);
    }

    // Region collection: every fan gap and merged red sector (non-reflex
    // ones), the bisecting half-planes and the run sectors when available.
    auto t_regions = Clock::now();
    std::vector<NamedRegion> regions;
    regions.push_back({"plane", ConvexRegion::plane()});
    int reflex_skipped = 0;
    if (n >= 2) {
        for (int r = 0; r < n; ++r) {
            const SectorFan fan = build_sector_fan(set, r);
            for (int g = 0; g < fan.gap_count(); ++g) {
                const ConvexRegion region = fan.gap_region(g);
                if (region.is_reflex()) {
                    ++reflex_skipped;
                    continue;
                }
                regions.push_back({"fan-sector", region});
            }
            for (const auto& rs : fan.red_sectors) {
                const ConvexRegion region = fan.red_sector_region(rs);
                if (region.is_reflex()) {
                    ++reflex_skipped;
                    continue;
                }
                regions.push_back({"red-sector", region});
            }
        }
    }

    std::string certificate_error;
    Certificate cert;
    bool have_cert = false;
    if (m >= n && n >= 2) {
        try {
            cert = assemble_certificate(set);
            have_cert = true;
        } catch (const std::logic_error& e) {
            certificate_error = e.what();
        }
    }
    if (have_cert && cert.branch == Certificate::Branch::good_sector) {
        for (const GoodSectorRun* run : {&cert.forward.value(), &cert.reflected.value()}) {
            const Direction normal = run->half == HalfChoice::ccw
                                         ? Direction(-run->axis.dy, run->axis.dx)
                                         : Direction(run->axis.dy, -run->axis.dx);
            regions.push_back({"half-plane", ConvexRegion::half_plane(run->apex, normal)});
            for (int i = 0; i < run->k(); ++i) {
                regions.push_back({"run-step", run->step_region(i)});
            }
            const ConvexRegion tr = run->terminal_region();
            if (!tr.is_reflex()) regions.push_back({"run-terminal", tr});
        }
    }

    if (with_list) {
        long long checked = 0, satisfied = 0;
        for (const NamedRegion& nr : regions) {
            ++checked;
            const long long lhs = rrb_in_region(set, nr.region, fast);
            if (lhs >= discrepancy_bound(set, nr.region)) ++satisfied;
        }
        add("discrepancy-bound",
            "rrb count >= |B(C)|*disc(C) over " + std::to_string(checked) + " regions (" +
                std::to_string(reflex_skipped) + " reflex skipped)",
            std::to_string(satisfied), std::to_string(checked), satisfied == checked);
    } else {
        add("discrepancy-bound", "skipped: no triangle list above 400 points", "-", "-", true);
    }
    report.timings_ms.emplace_back("region_bounds", ms_since(t_regions));

    // Minimum blue-sector count bound and its constructive witnesses.
    if (n >= 2) {
        auto t = Clock::now();
        const auto [p, r0] = p_min(set);
        const long long pn = static_cast<long long>(p) * n;
        add("min-sector-bound", "2*rrb >= p*n with p = " + std::to_string(p),
            std::to_string(2 * fast.count_rrb), std::to_string(pn), 2 * fast.count_rrb >= pn);
        if (m >= 1) {
            const auto witnesses = sector_witness_triangles(set);
            add("min-sector-witnesses", "2*|witnesses| >= p*n, all verified empty",
                std::to_string(2 * witnesses.size()), std::to_string(pn),
                2 * static_cast<long long>(witnesses.size()) >= pn);
        }
        report.timings_ms.emplace_back("sector_bounds", ms_since(t));
    }

    // Per-blue empty-sector floor (full depth only).
    if (depth == VerifyDepth::full && n >= 1) {
        auto t = Clock::now();
        long long checked = 0, satisfied = 0;
        for (const NamedRegion& nr : regions) {
            int reds_in = 0;
            std::vector<int> blues_in;
            for (int q = 0; q < total; ++q) {
                if (!nr.region.contains(set.point(q))) continue;
                if (set.color(q) == Color::red) ++reds_in;
                else blues_in.push_back(set.blue_index(q));
            }
            if (reds_in == 0) continue;
            for (int b : blues_in) {
                const auto stats = empty_sector_count(set, nr.region, b);
                const long long floor = reds_in - (static_cast<long long>(blues_in.size()) - 1);
                ++checked;
                if (floor <= 0 || stats.empty_sectors >= floor) ++satisfied;
            }
        }
        add("empty-sector-floor",
            "per blue: empty sectors >= |R(C)| - (|B(C)|-1) over " + std::to_string(checked) +
                " (region, blue) pairs",
            std::to_string(satisfied), std::to_string(checked), satisfied == checked);
        report.timings_ms.emplace_back("empty_sector_floor", ms_since(t));
    }

    // Certificate soundness and the count floor.
    if (m >= n && n >= 2) {
        if (have_cert) {
            add("certificate-soundness",
                std::string("census rrb >= certified lower bound (") + branch_name(cert.branch) +
                    " branch)",
                std::to_string(fast.count_rrb), cert.lower_bound.str(),
                Rat(fast.count_rrb) >= cert.lower_bound);
        } else {
            add("certificate-soundness", "structural failure: " + certificate_error, "-", "-",
                false);
        }
        if (n >= 5) {
            add("count-floor", "n^3 <= (72*rrb)^2",
                std::to_string(fast.count_rrb), "n^(3/2)/72 with n = " + std::to_string(n),
                rrb_count_floor_holds(n, fast.count_rrb));
        }
    } else {
        add("certificate-soundness",
            "skipped: certificate requires m >= n >= 2 (n = " + std::to_string(n) +
                ", m = " + std::to_string(m) + "); swap colors to certify rbb",
            "-", "-", true);
    }

    report.overall = true;
    for (const CheckRecord& c : report.checks) report.overall = report.overall && c.pass;
    return report;
}

Json verification_report_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const CheckRecord& c : report.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"detail", c.detail},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"pass", c.pass}});
    }
    Json timings;
    for (const auto& [phase, ms] : report.timings_ms) timings[phase] = ms;
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["fingerprint"] = report.instance_fingerprint;
    j["checks"] = checks;
    j["overall"] = report.overall;
    j["timings_ms"] = timings;
    return j;
}

}  // namespace rrb
