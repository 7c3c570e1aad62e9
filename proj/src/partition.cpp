#include "tabstat/partition.hpp"

#include <algorithm>
#include <numeric>

namespace tabstat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        detail::require(parts_[i] >= 1, "Partition: parts must be positive");
        if (i + 1 < parts_.size())
            detail::require(parts_[i] >= parts_[i + 1], "Partition: parts must be weakly decreasing");
    }
}

int Partition::cells() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_len(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

int Partition::col_height(int j) const {
    if (j < 1) return 0;
    int h = 0;
    for (int p : parts_)
        if (p >= j) ++h;
    return h;
}

bool Partition::contains(int row, int col) const {
    return row >= 1 && col >= 1 && col <= row_len(row);
}

bool Partition::compatible_column(int i) const {
    if (i < 1) return false;
    int h = col_height(i);
    return h >= 1 && h == col_height(i + 1);
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int j = 1; j <= num_cols(); ++j) cols.push_back(col_height(j));
    return Partition(std::move(cols));
}

bool Partition::is_rectangle() const {
    if (parts_.empty()) return true;
    return parts_.front() == parts_.back();
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<RectBlock> rectangle_decomposition(const Partition& shape) {
    std::vector<RectBlock> blocks;
    int n = shape.num_cols();
    int j = 1;
    while (j <= n) {
        int h = shape.col_height(j);
        int k = j;
        while (k + 1 <= n && shape.col_height(k + 1) == h) ++k;
        blocks.push_back({j, k - j + 1, h});
        j = k + 1;
    }
    return blocks;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_up_to(int max_size) {
    detail::require(max_size >= 0, "partitions_up_to: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int n = 0; n <= max_size; ++n) gen_partitions(n, n, cur, out);
    return out;
}

}  // namespace tabstat
