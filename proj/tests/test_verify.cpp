#include "doctest.h"

#include "json.hpp"
#include "rrb/generators.hpp"
#include "rrb/verify.hpp"
#include "test_util.hpp"

using namespace rrb;

namespace {

ColoredPointSet square_instance() {
    return ColoredPointSet::create({{0, 0}, {10, 10}}, {{10, 0}, {0, 10}});
}

}  // namespace

TEST_CASE("verify_all passes on the square instance") {
    const auto report = verify_all(square_instance(), VerifyDepth::quick);
    CHECK(report.overall);
    const CheckRecord* bound = report.find("min-sector-bound");
    REQUIRE(bound != nullptr);
    // census rrb = 2, p = 1, n = 2: recorded as 2*rrb >= p*n.
    CHECK(bound->lhs == "4");
    CHECK(bound->rhs == "2");
    CHECK(bound->pass);
    const CheckRecord* cert = report.find("certificate-soundness");
    REQUIRE(cert != nullptr);
    CHECK(cert->pass);
    CHECK(report.find("census-cross-check")->pass);
    CHECK(report.find("pair-witness")->pass);
    CHECK(report.find("discrepancy-bound")->pass);
}

TEST_CASE("verify_all records the certificate gate for m < n") {
    const auto set = ColoredPointSet::create({{0, 0}, {4, 0}}, {{1, 3}});
    const auto report = verify_all(set, VerifyDepth::quick);
    CHECK(report.overall);
    const CheckRecord* cert = report.find("certificate-soundness");
    REQUIRE(cert != nullptr);
    CHECK(cert->pass);
    CHECK(cert->detail.find("m >= n") != std::string::npos);
    CHECK(report.find("count-floor") == nullptr);  // gated on m >= n >= 5
}

TEST_CASE("verify_all rejects invalid sets before any check") {
    const auto bad = ColoredPointSet::create_unchecked({{0, 0}, {1, 1}, {2, 2}}, 2);
    CHECK_THROWS_AS(verify_all(bad, VerifyDepth::quick), std::invalid_argument);
}

TEST_CASE("verify_all passes across a mixed sweep") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        const int m = n + static_cast<int>(seed % 4);
        const auto set = testutil::sweep_instance(n, m, 300 + seed);
        const auto report = verify_all(set, VerifyDepth::quick);
        CHECK(report.overall);
    }
}

TEST_CASE("verify_all full depth adds the empty-sector floor") {
    const auto set = gen_random_gp(7, 9, 50000, 17);
    const auto quick = verify_all(set, VerifyDepth::quick);
    const auto full = verify_all(set, VerifyDepth::full);
    CHECK(quick.find("empty-sector-floor") == nullptr);
    const CheckRecord* floor = full.find("empty-sector-floor");
    REQUIRE(floor != nullptr);
    CHECK(floor->pass);
    CHECK(full.overall);
}

TEST_CASE("verify_all verdicts are deterministic") {
    const auto set = gen_random_gp(8, 10, 100000, 23);
    const auto a = verify_all(set, VerifyDepth::quick);
    const auto b = verify_all(set, VerifyDepth::quick);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].lhs == b.checks[i].lhs);
        CHECK(a.checks[i].rhs == b.checks[i].rhs);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
    CHECK(a.instance_fingerprint == b.instance_fingerprint);
}

TEST_CASE("verification report JSON round-trips") {
    const auto report = verify_all(square_instance(), VerifyDepth::full);
    const Json j = verification_report_to_json(report);
    const std::string text = j.dump(2);
    const Json back = Json::parse(text);
    CHECK(back.dump(2) == text);
    CHECK(back["overall"].get<bool>());
}

TEST_CASE("ceiling fact") {
    // x = 2: 1*1 = 1 >= 8/9; x = 3: 1*2 = 2 = 2*9/9 exactly.
    CHECK(ceiling_fact_scan(2));
    CHECK(ceiling_fact_scan(3));
    CHECK(ceiling_fact_scan(10000));
    CHECK_THROWS_AS(ceiling_fact_scan(1), std::invalid_argument);
}

TEST_CASE("rrb count floor arithmetic") {
    CHECK(rrb_count_floor_holds(25, 2));
    CHECK_FALSE(rrb_count_floor_holds(25, 1));
    CHECK(rrb_count_floor_holds(5, 1));  // 125 <= 5184
    CHECK(rrb_count_floor_holds(1 << 30, 1LL << 50));
    CHECK_FALSE(rrb_count_floor_holds(4, -1));
}
