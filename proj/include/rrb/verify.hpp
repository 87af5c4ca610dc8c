#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrb/io.hpp"
#include "rrb/point_set.hpp"

namespace rrb {

enum class VerifyDepth { quick, full };

struct CheckRecord {
    std::string name;
    std::string detail;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct VerificationReport {
    int n = 0;
    int m = 0;
    std::string instance_fingerprint;
    std::vector<CheckRecord> checks;
    bool overall = false;  // conjunction of all records
    std::vector<std::pair<std::string, double>> timings_ms;

    const CheckRecord* find(const std::string& name) const;
};

// Runs the whole inequality battery against the census ground truth:
// fast/oracle cross-check (oracle capped at 60 points for quick, 40 for
// full), pair witnesses, the discrepancy bound over fan sectors and run
// regions, the minimum-blue-sector count bound, certificate soundness and
// the n^{3/2}/72 floor. `full` additionally checks the per-blue empty-sector
// floor in every tested region. Throws on invalid input sets.
VerificationReport verify_all(const ColoredPointSet& set, VerifyDepth depth);

Json verification_report_to_json(const VerificationReport& report);

// ceil(x/3) * (x - ceil(x/3)) >= 2x^2/9 for every integer 2 <= x <= limit.
bool ceiling_fact_scan(long long limit);

// n^3 <= (72 * rrb)^2 in integer arithmetic.
bool rrb_count_floor_holds(int n, long long rrb);

}  // namespace rrb
