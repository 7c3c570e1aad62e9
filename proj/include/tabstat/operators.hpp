#pragma once

#include <vector>

#include "tabstat/filling.hpp"
#include "tabstat/statistics.hpp"

namespace tabstat {

enum class BlockSide { Left, Right, Neutral };
enum class BlockKind { A, B, C, NotDescent };

// A 2x2 window between columns (i, i+1) spanning rows (r, r+1); either row
// may be one of the sentinel rows 0 or lambda'_i + 1. Entries:
//   a = sigma(r+1, i)   b = sigma(r+1, i+1)
//   c = sigma(r,   i)   d = sigma(r,   i+1)
// Side records which column descends; descent blocks split into the kinds
// A ({c,d} holds the extremes), B ({a,b} holds the extremes) and C.
struct DescentBlock {
    int col = 0;  // i
    int row = 0;  // r
    ExtValue a, b, c, d;
    BlockSide side = BlockSide::Neutral;
    BlockKind kind = BlockKind::NotDescent;

    bool is_descent() const { return side != BlockSide::Neutral; }
};

DescentBlock classify_block(const Filling& f, int i, int r);

// t_i^(r): swap the entries at (r,i) and (r,i+1).
Filling row_swap(const Filling& f, int i, int r);

// t_i^[r,s]: swap the column pair on every row r..s.
Filling range_swap(const Filling& f, int i, int r, int s);

struct FlipResult {
    Filling filling;
    int start_row = 0;  // k, the topmost swapped row
    int end_row = 0;    // h, the bottommost swapped row
    bool identity = false;
    // Columns differ only above row r, so no starting row exists; the result
    // is the identity. Never reachable from the bijections.
    bool no_start_row = false;
};

// rho_i^r: starting row k = max{k <= r : sigma(k,i) != sigma(k,i+1)}, ending
// row h = max{h <= k} with differing entries and equal indicator values
// against the row below (row 0 reads Infinity); swaps rows h..k.
FlipResult rho(const Filling& f, int i, int r);

// rho_i = rho_i^{lambda'_i}.
FlipResult rho_top(const Filling& f, int i);

// epsilon maps a descent block to flip parameters (i, kappa) with
// rho_i^kappa the flip it induces.
struct FlipParams {
    int column = 0;
    int kappa = 0;
};
FlipParams epsilon(const Filling& f, const DescentBlock& block);

// Maximal row intervals [lo, hi] of the column pair (i, i+1) obtained by
// cutting below every row whose two indicator values against the row below
// agree. Reported top to bottom; their union is rows 1..lambda'_i.
struct RowInterval {
    int lo = 0;
    int hi = 0;
    bool operator==(const RowInterval&) const = default;
};
std::vector<RowInterval> components(const Filling& f, int i);

// The involution phi_i: per component, count the descent blocks in the
// window widened by the border-block rules and swap the component's rows
// when the count is odd.
Filling phi(const Filling& f, int i);

}  // namespace tabstat
