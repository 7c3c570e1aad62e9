#include "tabstat/bijections.hpp"

#include <algorithm>

namespace tabstat {

namespace {

void record(Trace* trace, TraceStep step) {
    if (trace) trace->steps.push_back(std::move(step));
}

// phi cascade over columns [col_lo, col_hi] of equal height: pass j applies
// phi_i for i = col_hi-1 down to col_lo-1+j.
Filling cascade(Filling f, int col_lo, int col_hi, Trace* trace) {
    int width = col_hi - col_lo + 1;
    for (int pass = 1; pass <= width - 1; ++pass) {
        for (int i = col_hi - 1; i >= col_lo - 1 + pass; --i) {
            f = phi(f, i);
            record(trace, TraceStep{"phi", i, 0, 0, {}, f});
        }
    }
    return f;
}

}  // namespace

std::int64_t kappa(const Filling& f) {
    detail::require(!f.is_padded(), "kappa: padded filling");
    std::int64_t total = 0;
    for (const RectBlock& blk : rectangle_decomposition(f.shape())) {
        Filling b = extract_block(f, blk);
        total += quinv(b) - inv(split_reverse_join(b));
    }
    return total;
}

Filling theta(const Filling& f, Trace* trace) {
    detail::require(f.shape().is_rectangle(), "theta: shape must be a rectangle");
    if (trace) trace->input = f;
    if (f.empty()) {
        if (trace) trace->output = f;
        return f;
    }
    Filling out = split_reverse_join(f);
    record(trace, TraceStep{"reverse", 0, 0, 0, {}, out});
    out = cascade(std::move(out), 1, f.shape().num_cols(), trace);
    if (trace) trace->output = out;
    return out;
}

Filling gamma(const Filling& f, Trace* trace) {
    detail::require(!f.is_padded(), "gamma: padded filling");
    if (trace) trace->input = f;
    if (f.empty()) {
        if (trace) trace->output = f;
        return f;
    }

    const Partition& shape = f.shape();
    // Base: the bottom row alone, reversed.
    std::vector<ExtValue> base = f.rows().front();
    std::reverse(base.begin(), base.end());
    int base_len = static_cast<int>(base.size());
    Filling g = Filling::padded(Partition({base_len}), {base});
    record(trace, TraceStep{"init", 0, 0, 0, {}, g});

    for (int k = 2; k <= shape.length(); ++k) {
        int s = shape.row_len(k);
        int n = shape.row_len(k - 1);
        std::vector<ExtValue> top(n, ExtValue::zero());
        for (int c = 1; c <= s; ++c) top[n - s + c - 1] = f.at(k, s - c + 1);  // zeros then reversed row

        {
            auto rows = g.rows();
            rows.push_back(top);
            auto parts = g.shape().parts();
            parts.push_back(n);
            g = Filling::padded(Partition(std::move(parts)), std::move(rows));
        }
        record(trace, TraceStep{"stack", 0, 0, 0, top, g});

        int top_row = k;
        // All transported columns sit in the full-height prefix of the
        // padded shape, so every phi/rho below acts on equal-height columns.
        for (int j = 1; j <= n; ++j)
            detail::internal_check(g.shape().col_height(j) == k, "gamma: padded columns must have equal height");

        for (int zi = 1; zi <= n - s; ++zi) {
            int start_col = n - s - zi + 1;
            int target_col = n - zi + 1;
            for (int j = start_col; j < target_col; ++j) {
                detail::internal_check(g.at(top_row, j).is_zero(), "gamma: transported zero out of place");
                ExtValue e = g.at(top_row, j + 1);
                ExtValue v = g.at(top_row - 1, j + 1);
                Filling next = phi(g, j);
                record(trace, TraceStep{"phi", j, 0, 0, {}, next});
                bool swapped = !next.at(top_row, j).is_zero();
                if (e > v) {
                    if (!swapped) {
                        next = row_swap(next, j, top_row);
                        record(trace, TraceStep{"t", j, top_row, 0, {}, next});
                    }
                } else {
                    FlipResult fr = rho(next, j, top_row);
                    detail::internal_check(!fr.identity, "gamma: rho must act on a differing top pair");
                    next = fr.filling;
                    record(trace, TraceStep{"rho", j, fr.end_row, fr.start_row, {}, next});
                    if (swapped) {
                        next = row_swap(next, j, top_row);
                        record(trace, TraceStep{"t", j, top_row, 0, {}, next});
                    }
                }
                detail::internal_check(next.at(top_row, j + 1).is_zero(), "gamma: zero failed to move right");
                g = std::move(next);
            }
        }

        if (s < n) {
            auto rows = g.rows();
            auto& toprow = rows.back();
            for (int c = s + 1; c <= n; ++c)
                detail::internal_check(toprow[c - 1].is_zero(), "gamma: zeros must end at the right");
            toprow.resize(s);
            auto parts = g.shape().parts();
            parts.back() = s;
            g = Filling::padded(Partition(std::move(parts)), std::move(rows));
            record(trace, TraceStep{"strip", 0, 0, 0, {}, g});
        }
    }

    detail::internal_check(!g.is_padded(), "gamma: output must not be padded");
    if (trace) trace->output = g;
    return g;
}

Filling varphi(const Filling& f, Trace* trace) {
    detail::require(!f.is_padded(), "varphi: padded filling");
    Filling out = gamma(f, trace);
    if (trace) trace->input = f;
    for (const RectBlock& blk : rectangle_decomposition(out.shape()))
        out = cascade(std::move(out), blk.col_start, blk.col_start + blk.width - 1, trace);
    if (trace) trace->output = out;
    return out;
}

}  // namespace tabstat
