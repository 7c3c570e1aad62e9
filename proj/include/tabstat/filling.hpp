#pragma once

#include <string>
#include <vector>

#include "tabstat/partition.hpp"
#include "tabstat/value.hpp"

namespace tabstat {

// A filling assigns an entry to every cell of dg(lambda). Rows are stored
// bottom-up (French convention); within a row, entries run left to right.
//
// Ordinary fillings carry only positive entries. Fillings holding stored
// Zero entries are "padded"; they arise only inside gamma's zero transport.
// Infinity is never stored; it exists only as the extended read below row 1.
class Filling {
public:
    Filling() = default;

    // Ordinary filling from positive integers, rows bottom-up.
    Filling(Partition shape, const std::vector<std::vector<int>>& rows_bottom_up);

    // Filling that may contain Zero entries, rows bottom-up.
    static Filling padded(Partition shape, std::vector<std::vector<ExtValue>> rows_bottom_up);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<ExtValue>>& rows() const { return rows_; }
    bool is_padded() const { return padded_; }
    bool empty() const { return shape_.empty(); }

    // Entry at a cell of dg(lambda); 1-based, row 1 at the bottom.
    ExtValue at(int row, int col) const;

    // Extended read: row 0 yields Infinity, row lambda'_col + 1 yields Zero,
    // any other out-of-shape coordinate is an error.
    ExtValue extended(int row, int col) const;

    // Per-row entry multisets, bottom-up, each sorted ascending. Two fillings
    // are row-equivalent iff their signatures are equal. Not for padded.
    std::vector<std::vector<int>> row_class_signature() const;

    bool operator==(const Filling&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<ExtValue>> rows_;
    bool padded_ = false;
};

// Reverse the entries of each row independently inside every rectangle block.
// An involution; padded fillings allowed.
Filling split_reverse_join(const Filling& f);

// Reflect across the main diagonal; the shape becomes the conjugate.
// Rejects padded fillings.
Filling transpose(const Filling& f);

bool row_equivalent(const Filling& a, const Filling& b);

// The sub-filling of one rectangle block, as a filling of (width^height).
Filling extract_block(const Filling& f, const RectBlock& blk);

// --- text format ---------------------------------------------------------
//
// One line per row, the TOP row first, whitespace-separated positive decimal
// integers. Row lengths read bottom-up must form a partition.
Filling parse_filling(const std::string& text);
std::string serialize_filling(const Filling& f, bool bottom_up = false);

// Single-line form "top-row / ... / bottom-row", used in reports and traces.
std::string serialize_filling_line(const Filling& f);
Filling parse_filling_line(const std::string& line);

// --- structured format ----------------------------------------------------
//
// {"rows_top_to_bottom": [[...], ...]} with positive integer entries.
Filling filling_from_json_text(const std::string& json_text);
std::string filling_to_json_text(const Filling& f);

}  // namespace tabstat
