#include "tabstat/statistics.hpp"

#include <numeric>

namespace tabstat {

std::int64_t maj(const Filling& f) {
    const Partition& sh = f.shape();
    std::int64_t total = 0;
    for (int r = 2; r <= sh.length(); ++r) {
        for (int c = 1; c <= sh.row_len(r); ++c) {
            if (f.at(r, c) > f.at(r - 1, c)) {
                int leg = sh.col_height(c) - r;  // boxes strictly above (r,c)
                total += leg + 1;
            }
        }
    }
    return total;
}

std::int64_t inv(const Filling& f) {
    const Partition& sh = f.shape();
    std::int64_t total = 0;
    for (int r = 1; r <= sh.length(); ++r) {
        int len = sh.row_len(r);
        for (int i = 1; i <= len; ++i) {
            ExtValue a = f.at(r, i);
            ExtValue b = f.extended(r - 1, i);
            for (int j = i + 1; j <= len; ++j)
                total += triple_indicator(a, b, f.at(r, j));
        }
    }
    return total;
}

std::int64_t quinv(const Filling& f) {
    const Partition& sh = f.shape();
    std::int64_t total = 0;
    for (int r = 1; r <= sh.length(); ++r) {
        int len = sh.row_len(r);
        for (int i = 1; i <= len; ++i) {
            ExtValue b = f.at(r, i);
            ExtValue a = f.extended(r + 1, i);
            for (int j = i + 1; j <= len; ++j)
                total += triple_indicator(a, b, f.at(r, j));
        }
    }
    return total;
}

std::int64_t des(const Filling& f) {
    const Partition& sh = f.shape();
    std::int64_t total = 0;
    for (int r = 2; r <= sh.length(); ++r)
        for (int c = 1; c <= sh.row_len(r); ++c)
            if (f.at(r, c) > f.at(r - 1, c)) ++total;
    return total;
}

std::vector<int> ndes_vector(const Filling& f) {
    const Partition& sh = f.shape();
    std::vector<int> out(sh.num_cols(), 0);
    for (int c = 1; c <= sh.num_cols(); ++c)
        for (int r = 2; r <= sh.col_height(c); ++r)
            if (f.at(r, c) <= f.at(r - 1, c)) ++out[c - 1];
    return out;
}

std::int64_t StatBundle::ndes_total() const {
    return std::accumulate(ndes.begin(), ndes.end(), std::int64_t{0});
}

StatBundle stat_bundle(const Filling& f) {
    return StatBundle{maj(f), inv(f), quinv(f), des(f), ndes_vector(f)};
}

}  // namespace tabstat
