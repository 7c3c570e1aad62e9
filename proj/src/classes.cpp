#include "tabstat/classes.hpp"

#include <algorithm>
#include <map>

#include "tabstat/statistics.hpp"

namespace tabstat {

namespace {

mpz_class factorial(int n) {
    mpz_class out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

std::vector<std::vector<int>> sorted_rows(const Filling& f) {
    auto sig = f.row_class_signature();
    return sig;  // already sorted ascending per row
}

void check_budget(const mpz_class& size, std::int64_t budget) {
    if (size > budget)
        throw BudgetError("row class has " + size.get_str() + " fillings, budget is " +
                          std::to_string(budget));
}

}  // namespace

mpz_class row_class_size(const Filling& f) {
    mpz_class total = 1;
    for (const auto& row : sorted_rows(f)) {
        mpz_class rows_count = factorial(static_cast<int>(row.size()));
        std::size_t i = 0;
        while (i < row.size()) {
            std::size_t j = i;
            while (j < row.size() && row[j] == row[i]) ++j;
            rows_count /= factorial(static_cast<int>(j - i));
            i = j;
        }
        total *= rows_count;
    }
    return total;
}

void for_each_in_row_class(const Filling& f, std::int64_t budget,
                           const std::function<void(const Filling&)>& fn) {
    check_budget(row_class_size(f), budget);
    std::vector<std::vector<int>> rows = sorted_rows(f);
    const Partition& shape = f.shape();
    if (rows.empty()) {
        fn(f);
        return;
    }
    while (true) {
        fn(Filling(shape, rows));
        // Odometer: the top row is least significant under the bottom-up
        // concatenation order.
        int idx = static_cast<int>(rows.size()) - 1;
        while (idx >= 0 && !std::next_permutation(rows[idx].begin(), rows[idx].end())) --idx;
        if (idx < 0) break;
    }
}

std::vector<Filling> enumerate_row_class(const Filling& f, std::int64_t budget) {
    std::vector<Filling> out;
    for_each_in_row_class(f, budget, [&out](const Filling& g) { out.push_back(g); });
    return out;
}

GenPoly class_poly(const Filling& f, const ClassPolyWeights& weights, std::int64_t budget) {
    detail::require(!(weights.inv == StatVar::T && weights.quinv == StatVar::T) &&
                        !(weights.inv == StatVar::U && weights.quinv == StatVar::U),
                    "class_poly: inv and quinv cannot share a variable");
    GenPoly out;
    for_each_in_row_class(f, budget, [&](const Filling& g) {
        Monomial m;
        if (weights.maj_to_q) m.q = static_cast<int>(maj(g));
        auto assign = [&m](StatVar var, std::int64_t value) {
            if (var == StatVar::T) m.t = static_cast<int>(value);
            if (var == StatVar::U) m.u = static_cast<int>(value);
        };
        assign(weights.inv, inv(g));
        assign(weights.quinv, quinv(g));
        out.add_term(m, 1);
    });
    return out;
}

void for_each_filling(const Partition& shape, int max_entry,
                      const std::function<void(const Filling&)>& fn) {
    detail::require(max_entry >= 1, "for_each_filling: max_entry must be >= 1");
    int cells = shape.cells();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.row_len(i), 1);
    if (cells == 0) {
        fn(Filling(shape, rows));
        return;
    }
    while (true) {
        fn(Filling(shape, rows));
        int r = shape.length() - 1, c = shape.row_len(shape.length()) - 1;
        while (true) {
            if (rows[r][c] < max_entry) {
                ++rows[r][c];
                break;
            }
            rows[r][c] = 1;
            if (c > 0) {
                --c;
            } else if (r > 0) {
                --r;
                c = shape.row_len(r + 1) - 1;
            } else {
                return;
            }
        }
    }
}

void for_each_class_rep(const Partition& shape, int max_entry,
                        const std::function<void(const Filling&)>& fn) {
    detail::require(max_entry >= 1, "for_each_class_rep: max_entry must be >= 1");
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.row_len(i), 1);
    if (shape.cells() == 0) {
        fn(Filling(shape, rows));
        return;
    }
    // Advance the last row to its next weakly increasing word, carrying over.
    auto advance_row = [max_entry](std::vector<int>& row) -> bool {
        int len = static_cast<int>(row.size());
        for (int p = len - 1; p >= 0; --p) {
            if (row[p] < max_entry) {
                int v = row[p] + 1;
                for (int x = p; x < len; ++x) row[x] = v;
                return true;
            }
        }
        return false;
    };
    while (true) {
        fn(Filling(shape, rows));
        int idx = shape.length() - 1;
        while (idx >= 0 && !advance_row(rows[idx])) {
            std::fill(rows[idx].begin(), rows[idx].end(), 1);
            --idx;
        }
        if (idx < 0) break;
    }
}

ContentPoly macdonald_poly(const Partition& shape, int vars, TripleStat stat, std::int64_t budget) {
    detail::require(vars >= 1, "macdonald_poly: vars must be >= 1");
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(vars),
                  static_cast<unsigned long>(shape.cells()));
    if (count > budget)
        throw BudgetError("macdonald_poly: " + count.get_str() + " fillings exceed budget " +
                          std::to_string(budget));

    ContentPoly out;
    out.vars = vars;
    for_each_filling(shape, vars, [&](const Filling& f) {
        std::vector<int> content(vars, 0);
        for (const auto& row : f.rows())
            for (ExtValue v : row) ++content[v.finite() - 1];
        std::int64_t tstat = stat == TripleStat::Inv ? inv(f) : quinv(f);
        out.entries[content].add_term(Monomial{static_cast<int>(maj(f)), static_cast<int>(tstat), 0}, 1);
    });
    return out;
}

}  // namespace tabstat
