#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tabstat/filling.hpp"
#include "tabstat/genpoly.hpp"

namespace tabstat {

// Number of fillings row-equivalent to f: the product of the per-row
// multiset permutation counts.
mpz_class row_class_size(const Filling& f);

// All fillings row-equivalent to f, in lexicographic order of the rows
// concatenated bottom-up. The first element is the canonical representative
// (every row sorted ascending). Throws BudgetError beyond the budget.
std::vector<Filling> enumerate_row_class(const Filling& f, std::int64_t budget);

// Streaming variant.
void for_each_in_row_class(const Filling& f, std::int64_t budget,
                           const std::function<void(const Filling&)>& fn);

enum class StatVar { None, T, U };

struct ClassPolyWeights {
    bool maj_to_q = true;
    StatVar inv = StatVar::T;
    StatVar quinv = StatVar::U;
};

// Sum of the selected monomials over the whole row-equivalence class of f.
GenPoly class_poly(const Filling& f, const ClassPolyWeights& weights, std::int64_t budget);

enum class TripleStat { Inv, Quinv };

// Sum over all fillings of dg(lambda) with entries in 1..vars of
// q^maj t^stat, keyed by content vector.
ContentPoly macdonald_poly(const Partition& shape, int vars, TripleStat stat, std::int64_t budget);

// All fillings of dg(lambda) with entries in 1..max_entry, odometer order
// (bottom-up rows, left to right, last cell fastest).
void for_each_filling(const Partition& shape, int max_entry,
                      const std::function<void(const Filling&)>& fn);

// Canonical class representatives: every row weakly increasing with entries
// in 1..max_entry; one per row-content choice.
void for_each_class_rep(const Partition& shape, int max_entry,
                        const std::function<void(const Filling&)>& fn);

}  // namespace tabstat
