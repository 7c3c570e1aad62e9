#pragma once

#include <vector>

#include "tabstat/filling.hpp"

namespace fixtures {

using tabstat::ExtValue;
using tabstat::Filling;
using tabstat::Partition;

// Build a filling from rows listed top first, the way tableaux are drawn.
// Entries of 0 become stored Zero values (padded filling).
inline Filling tab(std::vector<std::vector<int>> rows_top_down) {
    std::vector<std::vector<ExtValue>> rows;
    std::vector<int> lens;
    for (auto it = rows_top_down.rbegin(); it != rows_top_down.rend(); ++it) {
        std::vector<ExtValue> row;
        for (int v : *it) row.push_back(v == 0 ? ExtValue::zero() : ExtValue::fin(v));
        rows.push_back(std::move(row));
        lens.push_back(static_cast<int>(it->size()));
    }
    return Filling::padded(Partition(std::move(lens)), std::move(rows));
}

// The shape (7,7,5,5,5,2) filling whose statistics are (maj,inv,quinv) =
// (33,40,32); the source of the golden bijection values.
inline Filling sample_6row() {
    return tab({{5, 4},
                {9, 3, 6, 1, 3},
                {2, 5, 9, 4, 8},
                {3, 9, 7, 3, 5},
                {5, 8, 4, 6, 4, 8, 7},
                {9, 3, 6, 5, 2, 10, 1}});
}

// Its image under gamma.
inline Filling sample_6row_gamma() {
    return tab({{4, 5},
                {3, 6, 1, 9, 3},
                {4, 8, 9, 2, 5},
                {3, 3, 5, 7, 9},
                {7, 8, 4, 6, 4, 8, 5},
                {1, 10, 2, 5, 6, 3, 9}});
}

// Its image under varphi: (quinv,maj) = (40,33), inv = 34.
inline Filling sample_6row_varphi() {
    return tab({{4, 5},
                {6, 3, 1, 3, 9},
                {8, 4, 5, 9, 2},
                {3, 3, 5, 7, 9},
                {7, 8, 4, 4, 6, 8, 5},
                {10, 1, 6, 2, 5, 9, 3}});
}

// Shape (3,3,1) class whose triple statistic table is the t<->u
// counterexample; the six members in table order.
inline std::vector<Filling> counterexample_class() {
    return {
        tab({{3}, {4, 1, 2}, {3, 3, 3}}), tab({{3}, {4, 2, 1}, {3, 3, 3}}),
        tab({{3}, {1, 2, 4}, {3, 3, 3}}), tab({{3}, {1, 4, 2}, {3, 3, 3}}),
        tab({{3}, {2, 4, 1}, {3, 3, 3}}), tab({{3}, {2, 1, 4}, {3, 3, 3}}),
    };
}

// The 6x2 flip example: rho_1 = t_1^[3,5].
inline Filling flip_example() {
    return tab({{3, 3}, {9, 3}, {2, 5}, {3, 9}, {5, 8}, {9, 3}});
}
inline Filling flip_example_result() {
    return tab({{3, 3}, {3, 9}, {5, 2}, {9, 3}, {5, 8}, {9, 3}});
}

// The 3-row involution example: phi_1 swaps the bottom row.
inline Filling involution_example() {
    return tab({{1, 2}, {5, 4}, {3, 7}});
}
inline Filling involution_example_result() {
    return tab({{1, 2}, {5, 4}, {7, 3}});
}

}  // namespace fixtures
