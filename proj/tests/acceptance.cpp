// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria are exact; the stated time budgets are enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tabstat/cli.hpp"
#include "tabstat/verify.hpp"

using namespace tabstat;
using fixtures::tab;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds;
    std::function<void(std::vector<std::string>&)> body;  // appends failure notes
};

void expect(std::vector<std::string>& fails, bool cond, const std::string& what) {
    if (!cond) fails.push_back(what);
}

void expect_pass(std::vector<std::string>& fails, const VerificationReport& rep,
                 const std::string& what) {
    if (!rep.pass()) {
        std::string note = what + ": " + std::to_string(rep.total_violations) + " violations";
        if (!rep.violations.empty())
            note += " (first: " + rep.violations[0].filling + " | " + rep.violations[0].expected +
                    " | " + rep.violations[0].actual + ")";
        fails.push_back(note);
    }
}

bool trace_contains_in_order(const Trace& trace, const std::vector<Filling>& needles) {
    std::size_t next = 0;
    for (const TraceStep& step : trace.steps)
        if (next < needles.size() && step.after == needles[next]) ++next;
    return next == needles.size();
}

const VerifyOptions kSerial{1000000, 10, 1};

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "golden statistics on the 6-row sample and its varphi image", 1.0,
                        [](std::vector<std::string>& fails) {
                            StatBundle s = stat_bundle(fixtures::sample_6row());
                            expect(fails, s.maj == 33, "maj(sigma) != 33");
                            expect(fails, s.inv == 40, "inv(sigma) != 40");
                            expect(fails, s.quinv == 32, "quinv(sigma) != 32");
                            StatBundle t = stat_bundle(fixtures::sample_6row_varphi());
                            expect(fails, t.maj == 33, "maj(varphi) != 33");
                            expect(fails, t.quinv == 40, "quinv(varphi) != 40");
                            expect(fails, t.inv == 34, "inv(varphi) != 34");
                        }});

    criteria.push_back({2,
                        "golden bijections: gamma and varphi match the printed tableaux, trace "
                        "walks the zero transports in order",
                        1.0, [](std::vector<std::string>& fails) {
                            Trace gtrace;
                            Filling g = gamma(fixtures::sample_6row(), &gtrace);
                            expect(fails, g == fixtures::sample_6row_gamma(),
                                   "gamma image differs from the printed tableau");
                            Filling v = varphi(fixtures::sample_6row());
                            expect(fails, v == fixtures::sample_6row_varphi(),
                                   "varphi image differs from the printed tableau");

                            std::vector<Filling> transports = {
                                tab({{0, 0, 5, 3, 7, 9, 3}, {7, 8, 4, 6, 4, 8, 5}, {1, 10, 2, 5, 6, 3, 9}}),
                                tab({{0, 5, 0, 3, 7, 9, 3}, {7, 4, 8, 6, 4, 8, 5}, {1, 2, 10, 5, 6, 3, 9}}),
                                tab({{0, 5, 3, 0, 7, 9, 3}, {7, 4, 8, 6, 4, 8, 5}, {1, 2, 5, 10, 6, 3, 9}}),
                                tab({{0, 5, 3, 7, 0, 9, 3}, {7, 4, 8, 6, 4, 8, 5}, {1, 2, 5, 10, 6, 3, 9}}),
                                tab({{0, 5, 3, 7, 9, 0, 3}, {7, 4, 8, 6, 8, 4, 5}, {1, 2, 5, 10, 3, 6, 9}}),
                                tab({{0, 5, 3, 7, 9, 3, 0}, {7, 4, 8, 6, 8, 4, 5}, {1, 2, 5, 10, 3, 6, 9}}),
                                tab({{5, 0, 3, 7, 9, 3, 0}, {4, 7, 8, 6, 8, 4, 5}, {1, 2, 5, 10, 3, 6, 9}}),
                                tab({{5, 3, 0, 7, 9, 3, 0}, {4, 7, 8, 6, 8, 4, 5}, {1, 2, 5, 10, 3, 6, 9}}),
                                tab({{5, 3, 7, 0, 9, 3, 0}, {4, 7, 6, 8, 8, 4, 5}, {1, 2, 10, 5, 3, 6, 9}}),
                                tab({{5, 3, 7, 9, 0, 3, 0}, {4, 7, 6, 8, 8, 4, 5}, {1, 2, 10, 5, 3, 6, 9}}),
                                tab({{5, 3, 7, 9, 3, 0, 0}, {4, 7, 6, 8, 4, 8, 5}, {1, 2, 10, 5, 6, 3, 9}}),
                                tab({{0, 0, 0, 4, 5},
                                     {3, 1, 6, 3, 9},
                                     {8, 4, 9, 5, 2},
                                     {5, 3, 7, 9, 3},
                                     {4, 7, 6, 8, 4, 8, 5},
                                     {1, 2, 10, 5, 6, 3, 9}}),
                                tab({{0, 0, 4, 0, 5},
                                     {3, 1, 6, 3, 9},
                                     {8, 4, 9, 5, 2},
                                     {5, 3, 7, 9, 3},
                                     {4, 7, 6, 8, 4, 8, 5},
                                     {1, 2, 5, 10, 6, 3, 9}}),
                                tab({{0, 0, 4, 5, 0},
                                     {3, 1, 6, 9, 3},
                                     {8, 4, 9, 2, 5},
                                     {5, 3, 7, 3, 9},
                                     {4, 7, 6, 8, 4, 8, 5},
                                     {1, 2, 5, 10, 6, 3, 9}}),
                                tab({{0, 4, 0, 5, 0},
                                     {3, 1, 6, 9, 3},
                                     {8, 4, 9, 2, 5},
                                     {5, 3, 7, 3, 9},
                                     {4, 7, 6, 8, 4, 8, 5},
                                     {1, 2, 5, 10, 6, 3, 9}}),
                                tab({{0, 4, 5, 0, 0},
                                     {3, 1, 6, 9, 3},
                                     {8, 4, 9, 2, 5},
                                     {5, 3, 3, 7, 9},
                                     {4, 7, 8, 6, 4, 8, 5},
                                     {1, 2, 10, 5, 6, 3, 9}}),
                                tab({{4, 0, 5, 0, 0},
                                     {3, 1, 6, 9, 3},
                                     {4, 8, 9, 2, 5},
                                     {3, 5, 3, 7, 9},
                                     {7, 4, 8, 6, 4, 8, 5},
                                     {1, 2, 10, 5, 6, 3, 9}}),
                                tab({{4, 5, 0, 0, 0},
                                     {3, 6, 1, 9, 3},
                                     {4, 8, 9, 2, 5},
                                     {3, 3, 5, 7, 9},
                                     {7, 8, 4, 6, 4, 8, 5},
                                     {1, 10, 2, 5, 6, 3, 9}}),
                            };
                            expect(fails, trace_contains_in_order(gtrace, transports),
                                   "gamma trace misses a printed zero-transport tableau");
                            expect(fails, replay(gtrace), "gamma trace does not replay");

                            // The same tableaux must show up, in order, in the
                            // CLI --trace output.
                            std::ostringstream out, err;
                            int code = run_cli({"gamma", "--filling",
                                                serialize_filling_line(fixtures::sample_6row()),
                                                "--trace"},
                                               out, err);
                            expect(fails, code == 0, "CLI gamma --trace failed");
                            std::size_t pos = 0;
                            bool in_order = true;
                            for (const Filling& state : transports) {
                                std::size_t found = out.str().find(serialize_filling(state), pos);
                                if (found == std::string::npos) {
                                    in_order = false;
                                    break;
                                }
                                pos = found + 1;
                            }
                            expect(fails, in_order,
                                   "CLI --trace output misses a printed transport tableau");
                        }});

    criteria.push_back({3, "golden operators: rho on the 6x2 example, phi on the 3-row example",
                        1.0, [](std::vector<std::string>& fails) {
                            FlipResult fr = rho(fixtures::flip_example(), 1, 6);
                            expect(fails, fr.start_row == 5 && fr.end_row == 3,
                                   "rho rows differ from [3,5]");
                            expect(fails, fr.filling == fixtures::flip_example_result(),
                                   "rho image differs from the printed tableau");
                            expect(fails,
                                   fr.filling == range_swap(fixtures::flip_example(), 1, 3, 5),
                                   "rho is not t_1^[3,5] here");

                            Filling f = fixtures::involution_example();
                            Filling g = phi(f, 1);
                            expect(fails, g == fixtures::involution_example_result(),
                                   "phi image differs from the printed tableau");
                            expect(fails, maj(g) == 2 && maj(f) == 2, "phi must preserve maj=2");
                            expect(fails,
                                   ndes_vector(f) == std::vector<int>{1, 2} &&
                                       ndes_vector(g) == std::vector<int>{2, 1},
                                   "phi must exchange ndes (1,2)->(2,1)");
                            expect(fails, inv(g) == inv(f) + 1 && quinv(g) == quinv(f) + 1,
                                   "phi must raise inv and quinv by one");
                        }});

    criteria.push_back({4, "counterexample class: table reproduced, T1 passes, T2 exits 1", 1.0,
                        [](std::vector<std::string>& fails) {
                            auto members = fixtures::counterexample_class();
                            std::vector<std::int64_t> expect_inv{0, 1, 2, 1, 2, 3};
                            std::vector<std::int64_t> expect_quinv{3, 2, 2, 1, 0, 1};
                            for (std::size_t i = 0; i < members.size(); ++i) {
                                StatBundle s = stat_bundle(members[i]);
                                expect(fails,
                                       s.maj == 2 && s.inv == expect_inv[i] &&
                                           s.quinv == expect_quinv[i],
                                       "table row " + std::to_string(i + 1) + " mismatch");
                            }
                            expect_pass(fails, check_T1_class(members[0], kSerial),
                                        "T1 class check");
                            VerificationReport t2 = check_T2_class(members[0], kSerial);
                            expect(fails, !t2.pass(), "T2 must flag the class");

                            std::ostringstream out, err;
                            int code = run_cli({"verify", "--theorem", "T2", "--filling",
                                                "3 / 4 1 2 / 3 3 3"},
                                               out, err);
                            expect(fails, code == 1, "CLI verify T2 must exit 1");
                            expect(fails,
                                   out.str().find("3 / 4 1 2 / 3 3 3  (2,0,3)") != std::string::npos,
                                   "CLI must reproduce the six-member table");
                        }});

    criteria.push_back({5, "T1 sweep: every shape with at most 6 cells, entries up to 3", 300.0,
                        [](std::vector<std::string>& fails) {
                            expect_pass(fails, sweep(Theorem::T1, 6, 3, false, kSerial),
                                        "T1 sweep");
                        }});

    criteria.push_back({6, "rectangle symmetry: T2 and the theta suite on rectangles up to 3x3",
                        120.0, [](std::vector<std::string>& fails) {
                            expect_pass(fails, sweep_rectangles(Theorem::T2, 3, 3, kSerial),
                                        "T2 rectangle sweep");
                            expect_pass(fails, sweep_rectangles(Theorem::ThetaSuite, 3, 3, kSerial),
                                        "theta suite");
                        }});

    criteria.push_back({7,
                        "involution suite: the four phi_i equations on shapes with at most 6 "
                        "cells, entries up to 3",
                        120.0, [](std::vector<std::string>& fails) {
                            expect_pass(fails, sweep(Theorem::PhiSuite, 6, 3, false, kSerial),
                                        "phi suite sweep");
                        }});

    criteria.push_back({8, "lemma suites: rectangle identities, flip deltas, tables, block kinds",
                        60.0, [](std::vector<std::string>& fails) {
                            expect_pass(fails, sweep_rectangles(Theorem::L51, 3, 3, kSerial), "L5.1");
                            expect_pass(fails, sweep_rectangles(Theorem::L52, 3, 3, kSerial), "L5.2");
                            expect_pass(fails, sweep_rectangles(Theorem::L53, 3, 3, kSerial), "L5.3");
                            expect_pass(fails, sweep_rectangles(Theorem::L63, 3, 3, kSerial), "L6.3");
                            expect_pass(fails, check_tables(6, kSerial), "tables");
                            expect_pass(fails, check_block_partition(4, kSerial), "block partition");
                        }});

    criteria.push_back({9,
                        "q=1 multinomial product and transpose-Mahonian identities over the "
                        "criterion-5 sweep",
                        120.0, [](std::vector<std::string>& fails) {
                            expect_pass(fails, sweep(Theorem::InvQ, 6, 3, false, kSerial), "invq");
                            expect_pass(fails, sweep(Theorem::TransposeMaj, 6, 3, false, kSerial),
                                        "transpose-maj");
                        }});

    criteria.push_back({10, "content polynomials agree for inv and quinv and are symmetric", 180.0,
                        [](std::vector<std::string>& fails) {
                            for (const Partition& shape :
                                 {Partition({1, 1}), Partition({2, 1}), Partition({2, 2}),
                                  Partition({3, 1}), Partition({3, 2, 1})})
                                expect_pass(fails, check_macdonald(shape, 3, kSerial),
                                            "macdonald " + shape.str());
                            ContentPoly hand =
                                macdonald_poly(Partition({1, 1}), 2, TripleStat::Inv, 1000000);
                            expect(fails, hand.entries.at({1, 1}).str() == "q + 1",
                                   "content (1,1) coefficient must be q + 1");
                        }});

    criteria.push_back({11, "criteria 5-10 reports are byte-identical at 1 and 8 workers", 600.0,
                        [](std::vector<std::string>& fails) {
                            VerifyOptions parallel = kSerial;
                            parallel.workers = 8;
                            auto same = [&fails](const VerificationReport& a,
                                                 const VerificationReport& b,
                                                 const std::string& what) {
                                expect(fails,
                                       report_json_text(a) == report_json_text(b) &&
                                           report_text(a) == report_text(b),
                                       what + ": reports differ across worker counts");
                            };
                            same(sweep(Theorem::T1, 6, 3, false, kSerial),
                                 sweep(Theorem::T1, 6, 3, false, parallel), "T1");
                            same(sweep_rectangles(Theorem::T2, 3, 3, kSerial),
                                 sweep_rectangles(Theorem::T2, 3, 3, parallel), "T2");
                            same(sweep_rectangles(Theorem::ThetaSuite, 3, 3, kSerial),
                                 sweep_rectangles(Theorem::ThetaSuite, 3, 3, parallel), "theta");
                            same(sweep(Theorem::PhiSuite, 6, 3, false, kSerial),
                                 sweep(Theorem::PhiSuite, 6, 3, false, parallel), "phi");
                            same(sweep_rectangles(Theorem::L53, 3, 3, kSerial),
                                 sweep_rectangles(Theorem::L53, 3, 3, parallel), "L5.3");
                            same(sweep(Theorem::InvQ, 6, 3, false, kSerial),
                                 sweep(Theorem::InvQ, 6, 3, false, parallel), "invq");
                            same(sweep(Theorem::TransposeMaj, 6, 3, false, kSerial),
                                 sweep(Theorem::TransposeMaj, 6, 3, false, parallel),
                                 "transpose-maj");
                            same(sweep(Theorem::Macdonald, 5, 3, false, kSerial),
                                 sweep(Theorem::Macdonald, 5, 3, false, parallel), "macdonald");
                        }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::vector<std::string> fails;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.time_limit_seconds)
            fails.push_back("exceeded the " + std::to_string(c.time_limit_seconds) + "s budget");
        bool ok = fails.empty();
        failures += ok ? 0 : 1;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " - " << c.title
                  << " [" << secs << "s]\n";
        for (const std::string& note : fails) std::cout << "    " << note << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
