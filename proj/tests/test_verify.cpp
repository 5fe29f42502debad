#include <doctest.h>

#include "polyq/verify.hpp"

using namespace polyq;

TEST_CASE("agreement sweep passes and counts its work") {
    auto report = check_agreement(3, 2, ExecMode::Serial);
    CHECK(report.pass());
    CHECK(report.failures.empty());
    CHECK(report.tree_classes == 4);  // 1 + 1 + 2 shapes
    // grid sizes 3^2 + 3^3 + 2 * 3^4
    CHECK(report.checks_run == 198);
    CHECK(report.max_leaves == 3);
    CHECK(report.max_label == 2);
}

TEST_CASE("serial and parallel sweeps produce the same report") {
    auto serial = check_agreement(4, 2, ExecMode::Serial);
    auto parallel = check_agreement(4, 2, ExecMode::Parallel);
    CHECK(serial.pass());
    CHECK(parallel.pass());
    CHECK(serial.to_json(false).dump() == parallel.to_json(false).dump());
    // reruns are byte-identical too
    auto again = check_agreement(4, 2, ExecMode::Parallel);
    CHECK(parallel.to_json(false).dump() == again.to_json(false).dump());
}

TEST_CASE("timing is the only non-canonical report field") {
    auto report = check_agreement(2, 1, ExecMode::Serial);
    auto with_timing = report.to_json(true);
    auto canonical = report.to_json(false);
    CHECK(with_timing.contains("wall_seconds"));
    CHECK_FALSE(canonical.contains("wall_seconds"));
    CHECK(canonical.contains("scope"));
    CHECK(canonical["pass"] == true);
    CHECK(canonical["failures"].is_array());
    CHECK(canonical["failures"].empty());
}

TEST_CASE("operad laws and recurrence checks pass") {
    auto laws = check_operad_laws(3);
    CHECK(laws.pass());
    CHECK(laws.checks_run > 0);
    auto rec = check_recurrence(8);
    CHECK(rec.pass());
    CHECK(rec.checks_run > 0);
}

TEST_CASE("failures order by check, tree, then input") {
    VerificationFailure a{"agreement", "(*,*)", {0, 1}, "1", "2"};
    VerificationFailure b{"agreement", "(*,*)", {1, 0}, "1", "2"};
    VerificationFailure c{"unit", "", {0, 0}, "1", "2"};
    CHECK(a < b);
    CHECK(a < c);
    CHECK_FALSE(b < a);
    CHECK(a == a);
}
