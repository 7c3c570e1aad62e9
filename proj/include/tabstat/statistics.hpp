#pragma once

#include <cstdint>
#include <vector>

#include "tabstat/filling.hpp"

namespace tabstat {

// The cyclic-order indicator behind both triple statistics: 1 iff one of
// a<b<c, b<c<a, c<a<b, a=b!=c holds under the ExtValue total order.
inline int triple_indicator(ExtValue a, ExtValue b, ExtValue c) {
    if ((a < b && b < c) || (b < c && c < a) || (c < a && a < b)) return 1;
    return (a == b && b != c) ? 1 : 0;
}

// maj: sum of leg(u)+1 over cells u whose entry exceeds the one below it.
std::int64_t maj(const Filling& f);

// inv: triples with a at (r,i), b the extended read at (r-1,i) and c at
// (r,j) for j>i; the (r-1,i) read is Infinity below the bottom row.
std::int64_t inv(const Filling& f);

// quinv: triples with b at (r,i), a the extended read at (r+1,i) and c at
// (r,j) for j>i; the (r+1,i) read is Zero above the column top.
std::int64_t quinv(const Filling& f);

std::int64_t des(const Filling& f);

// Per-column non-descent counts, one entry per column of the shape.
std::vector<int> ndes_vector(const Filling& f);

struct StatBundle {
    std::int64_t maj = 0;
    std::int64_t inv = 0;
    std::int64_t quinv = 0;
    std::int64_t des = 0;
    std::vector<int> ndes;

    std::int64_t ndes_total() const;
    bool operator==(const StatBundle&) const = default;
};

StatBundle stat_bundle(const Filling& f);

}  // namespace tabstat
