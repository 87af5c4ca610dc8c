#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rrb/generators.hpp"
#include "rrb/point_set.hpp"

namespace rrb {

struct AnnealParams {
    long long iterations = 10000;
    Coord step = 0;                  // 0: max(1, box/16)
    double t0 = -1.0;                // < 0: initial count / 10
    double ratio = 0.999;            // geometric cooling factor
    long long ratio_period = 100;    // iterations per cooling step
    std::uint64_t seed = 1;
    int restarts = 1;                // independent streams, merged by min
    long long audit_interval = 1000; // accepted moves between full recounts
    bool record_trace = true;
};

struct TraceRow {
    int restart;
    long long iteration;
    long long count;
    double temperature;
    bool accepted;
};

struct SearchResult {
    ColoredPointSet best;
    long long best_count = 0;
    long long proposals = 0;
    long long accepted = 0;
    std::vector<TraceRow> trace;
};

// Simulated annealing over single-point displacements, minimizing the empty
// rrb count. Moves that leave the box, duplicate a point or break general
// position are rejected. The objective is maintained incrementally via
// per-apex census contributions and audited against a full recount every
// audit_interval accepted moves (a mismatch aborts). Deterministic for a
// fixed seed; restart r uses the stream seed + r.
SearchResult minimize_rrb(int n, int m, Coord box, const AnnealParams& params);

std::string trace_csv(std::span<const TraceRow> rows);

struct HortonScanRow {
    int size_log2;
    std::string scheme;
    int points;
    int reds;
    long long count_rrb;
    double ratio;  // count_rrb / reds^2
};

// Empty rrb counts of bicolored Horton sets for each size 2^k and scheme,
// with the count/n^2 ratio. Sizes above 2^10 are out of budget.
std::vector<HortonScanRow> horton_bicoloring_scan(int k_min, int k_max,
                                                  std::span<const ColoringScheme> schemes);

std::string horton_scan_csv(std::span<const HortonScanRow> rows);

}  // namespace rrb
