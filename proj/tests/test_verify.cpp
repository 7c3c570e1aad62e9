#include <doctest.h>

#include "fixtures.hpp"
#include "tabstat/verify.hpp"

using namespace tabstat;
using fixtures::tab;

namespace {
const VerifyOptions kOpts{};
}

TEST_CASE("T1 class check passes on the counterexample class") {
    VerificationReport rep = check_T1_class(tab({{3}, {4, 1, 2}, {3, 3, 3}}), kOpts);
    CHECK(rep.pass());
    CHECK(rep.instances == 6);
    CHECK(rep.theorem == "T1");
}

TEST_CASE("T1 class check passes on singleton classes") {
    VerificationReport rep = check_T1_class(tab({{4, 4}, {1, 1, 1}}), kOpts);
    CHECK(rep.pass());
    CHECK(rep.instances == 1);
}

TEST_CASE("T2 class check flags the counterexample class") {
    VerificationReport rep = check_T2_class(tab({{3}, {4, 1, 2}, {3, 3, 3}}), kOpts);
    CHECK_FALSE(rep.pass());
    CHECK(rep.total_violations > 0);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].filling == "3 / 4 1 2 / 3 3 3");
}

TEST_CASE("T2 over all classes of the counterexample shape finds violations") {
    VerificationReport rep = check_T2_shape(Partition({3, 3, 1}), 4, kOpts);
    CHECK_FALSE(rep.pass());
    CHECK(rep.total_violations > 0);
    CHECK(rep.instances > 0);
}

TEST_CASE("T2 class check passes on rectangle classes") {
    VerificationReport rep = check_T2_class(tab({{1, 2, 3}, {3, 1, 2}}), kOpts);
    CHECK(rep.pass());
    VerificationReport cell = check_T2_class(tab({{7}}), kOpts);
    CHECK(cell.pass());
}

TEST_CASE("phi suite") {
    VerificationReport rep = check_phi_suite(Partition({2, 2, 2}), 3, kOpts);
    CHECK(rep.pass());
    CHECK(rep.instances == 729);  // 3^6 fillings, one compatible column
}

TEST_CASE("gamma suite") {
    CHECK(check_gamma_suite(Partition({2, 1}), 2, kOpts).pass());
    CHECK(check_gamma_suite(Partition({3, 3, 1}), 2, kOpts).pass());
}

TEST_CASE("theta suite") {
    CHECK(check_theta_suite(Partition({3, 3}), 3, kOpts).pass());
    CHECK_THROWS_AS(check_theta_suite(Partition({2, 1}), 2, kOpts), DomainError);
}

TEST_CASE("lemma sweeps on rectangles") {
    CHECK(sweep_rectangles(Theorem::L51, 3, 3, kOpts).pass());
    CHECK(sweep_rectangles(Theorem::L52, 3, 3, kOpts).pass());
    CHECK(sweep_rectangles(Theorem::L53, 3, 3, kOpts).pass());
    CHECK(sweep_rectangles(Theorem::L63, 3, 3, kOpts).pass());
}

TEST_CASE("table and block checks") {
    CHECK(check_tables(6, kOpts).pass());
    VerificationReport blocks = check_block_partition(4, kOpts);
    CHECK(blocks.pass());
    CHECK(blocks.instances == 256);
}

TEST_CASE("macdonald checks") {
    CHECK(check_macdonald(Partition({1, 1}), 2, kOpts).pass());
    CHECK(check_macdonald(Partition({2, 2}), 2, kOpts).pass());
    CHECK(check_macdonald(Partition({2, 1}), 3, kOpts).pass());
}

TEST_CASE("sweeps") {
    VerificationReport t1 = sweep(Theorem::T1, 4, 2, false, kOpts);
    CHECK(t1.pass());
    CHECK(t1.instances > 0);

    VerificationReport t2_rect = sweep_rectangles(Theorem::T2, 2, 2, kOpts);
    CHECK(t2_rect.pass());

    VerificationReport invq = sweep(Theorem::InvQ, 4, 2, false, kOpts);
    CHECK(invq.pass());

    VerificationReport tmaj = sweep(Theorem::TransposeMaj, 4, 2, false, kOpts);
    CHECK(tmaj.pass());
}

TEST_CASE("a broken identity is reported with replayable instances") {
    // L6.3 with a wrong delta would fail; simulate by checking the T2 sweep
    // over general shapes of size 7 catches the counterexample content.
    VerifyOptions opts;
    opts.violation_cap = 3;
    VerificationReport rep = check_T2_class(tab({{3}, {4, 1, 2}, {3, 3, 3}}), opts);
    CHECK_FALSE(rep.pass());
    CHECK(static_cast<int>(rep.violations.size()) <= 3);
    for (const Violation& v : rep.violations) {
        Filling f = parse_filling_line(v.filling);
        CHECK(f.shape() == Partition({3, 3, 1}));
    }
}

TEST_CASE("worker count does not change a report") {
    VerifyOptions serial;
    serial.workers = 1;
    VerifyOptions parallel;
    parallel.workers = 8;
    VerificationReport a = sweep(Theorem::T1, 4, 2, false, serial);
    VerificationReport b = sweep(Theorem::T1, 4, 2, false, parallel);
    CHECK(report_json_text(a) == report_json_text(b));
    CHECK(report_text(a) == report_text(b));
}

TEST_CASE("report rendering") {
    VerificationReport rep = check_T1_class(tab({{1, 2}}), kOpts);
    std::string text = report_text(rep);
    CHECK(text.find("theorem: T1") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
    std::string json = report_json_text(rep);
    CHECK(json.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("budget errors surface") {
    VerifyOptions tiny;
    tiny.budget = 2;
    CHECK_THROWS_AS(check_T1_class(tab({{1, 2, 3}}), tiny), BudgetError);
}
