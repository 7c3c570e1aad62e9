#include "tabstat/filling.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tabstat {

Filling::Filling(Partition shape, const std::vector<std::vector<int>>& rows_bottom_up)
    : shape_(std::move(shape)) {
    detail::require(static_cast<int>(rows_bottom_up.size()) == shape_.length(),
                    "Filling: row count does not match shape");
    rows_.reserve(rows_bottom_up.size());
    for (int i = 0; i < shape_.length(); ++i) {
        const auto& src = rows_bottom_up[i];
        detail::require(static_cast<int>(src.size()) == shape_.row_len(i + 1),
                        "Filling: row length does not match shape");
        std::vector<ExtValue> row;
        row.reserve(src.size());
        for (int v : src) row.push_back(ExtValue::fin(v));
        rows_.push_back(std::move(row));
    }
}

Filling Filling::padded(Partition shape, std::vector<std::vector<ExtValue>> rows_bottom_up) {
    Filling f;
    f.shape_ = std::move(shape);
    detail::require(static_cast<int>(rows_bottom_up.size()) == f.shape_.length(),
                    "Filling: row count does not match shape");
    for (int i = 0; i < f.shape_.length(); ++i) {
        detail::require(static_cast<int>(rows_bottom_up[i].size()) == f.shape_.row_len(i + 1),
                        "Filling: row length does not match shape");
        for (ExtValue v : rows_bottom_up[i]) {
            detail::require(!v.is_infinity(), "Filling: Infinity cannot be stored");
            if (v.is_zero()) f.padded_ = true;
        }
    }
    f.rows_ = std::move(rows_bottom_up);
    return f;
}

ExtValue Filling::at(int row, int col) const {
    detail::require(shape_.contains(row, col), "Filling::at: cell outside the diagram");
    return rows_[row - 1][col - 1];
}

ExtValue Filling::extended(int row, int col) const {
    detail::require(col >= 1 && col <= shape_.num_cols(), "Filling::extended: no such column");
    if (row == 0) return ExtValue::infinity();
    int h = shape_.col_height(col);
    if (row == h + 1) return ExtValue::zero();
    detail::require(row >= 1 && row <= h, "Filling::extended: cell outside the diagram");
    return rows_[row - 1][col - 1];
}

std::vector<std::vector<int>> Filling::row_class_signature() const {
    detail::require(!padded_, "row_class_signature: padded filling");
    std::vector<std::vector<int>> sig;
    sig.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::vector<int> vals;
        vals.reserve(row.size());
        for (ExtValue v : row) vals.push_back(v.finite());
        std::sort(vals.begin(), vals.end());
        sig.push_back(std::move(vals));
    }
    return sig;
}

bool row_equivalent(const Filling& a, const Filling& b) {
    return a.shape() == b.shape() && a.row_class_signature() == b.row_class_signature();
}

Filling extract_block(const Filling& f, const RectBlock& blk) {
    detail::require(blk.col_start >= 1 && blk.width >= 1 && blk.height >= 1 &&
                        blk.height <= f.shape().length() &&
                        blk.col_start + blk.width - 1 <= f.shape().row_len(blk.height),
                    "extract_block: block outside the diagram");
    std::vector<std::vector<ExtValue>> rows;
    rows.reserve(blk.height);
    for (int r = 1; r <= blk.height; ++r) {
        const auto& src = f.rows()[r - 1];
        rows.emplace_back(src.begin() + (blk.col_start - 1),
                          src.begin() + (blk.col_start - 1 + blk.width));
    }
    return Filling::padded(Partition(std::vector<int>(blk.height, blk.width)), std::move(rows));
}

Filling split_reverse_join(const Filling& f) {
    auto rows = f.rows();
    for (const RectBlock& blk : rectangle_decomposition(f.shape())) {
        for (int r = 1; r <= blk.height; ++r) {
            auto& row = rows[r - 1];
            std::reverse(row.begin() + (blk.col_start - 1),
                         row.begin() + (blk.col_start - 1 + blk.width));
        }
    }
    return Filling::padded(f.shape(), std::move(rows));
}

Filling transpose(const Filling& f) {
    detail::require(!f.is_padded(), "transpose: padded filling");
    Partition tshape = f.shape().conjugate();
    std::vector<std::vector<ExtValue>> rows(tshape.length());
    for (int i = 1; i <= tshape.length(); ++i)
        rows[i - 1].resize(tshape.row_len(i));
    for (int r = 1; r <= f.shape().length(); ++r)
        for (int c = 1; c <= f.shape().row_len(r); ++c)
            rows[c - 1][r - 1] = f.at(r, c);
    return Filling::padded(std::move(tshape), std::move(rows));
}

namespace {

Filling from_top_rows(std::vector<std::vector<int>> rows_top_down) {
    if (rows_top_down.empty()) return Filling();
    std::reverse(rows_top_down.begin(), rows_top_down.end());
    std::vector<int> lens;
    lens.reserve(rows_top_down.size());
    for (const auto& r : rows_top_down) {
        if (r.empty()) throw ParseError("filling: empty row");
        lens.push_back(static_cast<int>(r.size()));
    }
    for (std::size_t i = 0; i + 1 < lens.size(); ++i)
        if (lens[i] < lens[i + 1])
            throw ParseError("filling: row lengths read bottom-up do not form a partition");
    Partition shape{lens};
    for (const auto& row : rows_top_down)
        for (int v : row)
            if (v <= 0) throw ParseError("filling: entries must be positive integers");
    return Filling(std::move(shape), rows_top_down);
}

std::vector<int> parse_int_row(const std::string& line) {
    std::vector<int> row;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("filling: bad entry '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("filling: bad entry '" + tok + "'");
        if (v <= 0 || v > 1000000000) throw ParseError("filling: entries must be positive integers");
        row.push_back(static_cast<int>(v));
    }
    return row;
}

}  // namespace

Filling parse_filling(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto row = parse_int_row(line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("filling: empty input");
    return from_top_rows(std::move(rows));
}

std::string serialize_filling(const Filling& f, bool bottom_up) {
    std::string out;
    int n = f.shape().length();
    for (int k = 0; k < n; ++k) {
        int r = bottom_up ? k + 1 : n - k;
        const auto& row = f.rows()[r - 1];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += row[c].str();
        }
        out += '\n';
    }
    return out;
}

std::string serialize_filling_line(const Filling& f) {
    std::string out;
    int n = f.shape().length();
    for (int k = 0; k < n; ++k) {
        if (k) out += " / ";
        const auto& row = f.rows()[n - 1 - k];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += row[c].str();
        }
    }
    return out;
}

Filling parse_filling_line(const std::string& line) {
    std::string text = line;
    for (std::size_t p = text.find('/'); p != std::string::npos; p = text.find('/', p + 1))
        text[p] = '\n';
    return parse_filling(text);
}

Filling filling_from_json_text(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("filling: invalid json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows_top_to_bottom") || !doc["rows_top_to_bottom"].is_array())
        throw ParseError("filling: expected object with rows_top_to_bottom array");
    std::vector<std::vector<int>> rows;
    for (const auto& jrow : doc["rows_top_to_bottom"]) {
        if (!jrow.is_array()) throw ParseError("filling: rows_top_to_bottom must hold arrays");
        std::vector<int> row;
        for (const auto& jv : jrow) {
            if (!jv.is_number_integer()) throw ParseError("filling: entries must be integers");
            long v = jv.get<long>();
            if (v <= 0 || v > 1000000000) throw ParseError("filling: entries must be positive integers");
            row.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("filling: empty input");
    return from_top_rows(std::move(rows));
}

std::string filling_to_json_text(const Filling& f) {
    nlohmann::json rows = nlohmann::json::array();
    int n = f.shape().length();
    for (int k = n; k >= 1; --k) {
        nlohmann::json jrow = nlohmann::json::array();
        for (ExtValue v : f.rows()[k - 1]) jrow.push_back(v.is_zero() ? 0 : v.finite());
        rows.push_back(std::move(jrow));
    }
    nlohmann::json doc;
    doc["rows_top_to_bottom"] = std::move(rows);
    return doc.dump();
}

}  // namespace tabstat
