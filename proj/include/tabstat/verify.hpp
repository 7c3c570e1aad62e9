#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tabstat/bijections.hpp"
#include "tabstat/classes.hpp"

namespace tabstat {

struct Violation {
    std::string filling;  // serialized instance, replayable
    std::string expected;
    std::string actual;
    bool operator==(const Violation&) const = default;
};

struct VerificationReport {
    std::string theorem;
    std::string space;
    std::int64_t instances = 0;
    std::int64_t total_violations = 0;
    std::vector<Violation> violations;  // capped; total_violations is exact
    double elapsed_seconds = 0.0;       // not part of the serialized report

    bool pass() const { return total_violations == 0; }
};

struct VerifyOptions {
    std::int64_t budget = 1000000;
    int violation_cap = 10;
    int workers = 1;
};

enum class Theorem {
    T1,
    T2,
    PhiSuite,
    GammaSuite,
    ThetaSuite,
    L51,
    L52,
    L53,
    L63,
    Tables,
    BlockPartition,
    InvQ,
    TransposeMaj,
    Macdonald,
};

Theorem theorem_from_string(const std::string& name);
std::string theorem_name(Theorem t);

// --- class-level checks ----------------------------------------------------

// (E:T1) on the row class of f: generating-polynomial equality plus varphi
// transport (stat carrying and bijectivity onto the class).
VerificationReport check_T1_class(const Filling& f, const VerifyOptions& opts);

// (E:T2) on the row class of f: t<->u symmetry of the triple polynomial;
// on rectangles additionally the theta transport. Non-rectangular shapes are
// checked and violations flagged (no theorem claim there).
VerificationReport check_T2_class(const Filling& f, const VerifyOptions& opts);

// (E:T2) over every row class of one shape with entries 1..max_entry.
VerificationReport check_T2_shape(const Partition& shape, int max_entry, const VerifyOptions& opts);

// --- per-shape suites --------------------------------------------------------

VerificationReport check_phi_suite(const Partition& shape, int max_entry, const VerifyOptions& opts);
VerificationReport check_gamma_suite(const Partition& shape, int max_entry, const VerifyOptions& opts);
VerificationReport check_theta_suite(const Partition& shape, int max_entry, const VerifyOptions& opts);
VerificationReport check_macdonald(const Partition& shape, int vars, const VerifyOptions& opts);

// --- value-table suites ------------------------------------------------------

VerificationReport check_tables(int max_value, const VerifyOptions& opts);
VerificationReport check_block_partition(int max_value, const VerifyOptions& opts);

// --- sweeps ------------------------------------------------------------------

// All shapes with at most max_size cells (T1, T2, InvQ, TransposeMaj, the
// phi/gamma/theta suites, Macdonald).
VerificationReport sweep(Theorem which, int max_size, int max_entry, bool rectangles_only,
                         const VerifyOptions& opts);

// All rectangles (n^m) with n, m <= max_side (theta/T2/lemma suites).
VerificationReport sweep_rectangles(Theorem which, int max_side, int max_entry,
                                    const VerifyOptions& opts);

// --- rendering ----------------------------------------------------------------

std::string report_text(const VerificationReport& rep);
std::string report_json_text(const VerificationReport& rep);

}  // namespace tabstat
