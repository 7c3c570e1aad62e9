#pragma once

#include <string>
#include <vector>

#include "tabstat/errors.hpp"

namespace tabstat {

// Integer partition in French convention: parts are row lengths, row 1 is the
// bottom row. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }  // number of rows
    int cells() const;                                              // |lambda|
    bool empty() const { return parts_.empty(); }

    // 1-based accessors; out-of-range indices read as 0.
    int row_len(int i) const;     // lambda_i
    int col_height(int j) const;  // lambda'_j
    int num_cols() const { return row_len(1); }

    bool contains(int row, int col) const;

    // Column i has the same positive height as column i+1.
    bool compatible_column(int i) const;

    Partition conjugate() const;
    bool is_rectangle() const;

    const std::vector<int>& parts() const { return parts_; }
    bool operator==(const Partition&) const = default;

    std::string str() const;  // "(7,7,5,5,5,2)"

private:
    std::vector<int> parts_;
};

// One maximal run of equal-height columns. Runs are reported left to right;
// their heights strictly decrease.
struct RectBlock {
    int col_start = 0;  // 1-based leftmost column of the block
    int width = 0;
    int height = 0;
    bool operator==(const RectBlock&) const = default;
};

std::vector<RectBlock> rectangle_decomposition(const Partition& shape);

// All partitions with |lambda| <= max_size, the empty one included.
// Ordered by size, then reverse-lexicographically within one size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace tabstat
